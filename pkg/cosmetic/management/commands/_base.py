# -*- coding: utf-8 -*-
import json
import logging

from django.core.management.base import BaseCommand, CommandError

# cosmetic imports
from cosmetic.exceptions import CosmeticError, LiteralError

logger = logging.getLogger(__name__)

EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
EXIT_OVERFLOW = 3


class CosmeticCommand(BaseCommand):
    """Base of the cosmetic commands. Subclasses either implement
    ``run(**options)`` or register actions with :meth:`add_actions` and
    implement ``handle_<action>(**options)``.

    Errors leave with exit code 1 (domain error), 2 (malformed literal or
    usage) or 3 (overflow).
    """
    requires_system_checks = []

    def add_output_arguments(self, parser):
        parser.add_argument('--json', action='store_true', dest='json', default=False,
                            help='Print machine readable JSON, one object per line')

    def add_actions(self, parser, actions):
        """Registers one sub-parser per ``(name, help)`` pair and returns them
        by name. Each gets the ``--json`` switch.
        """
        subparsers = parser.add_subparsers(dest='action', metavar='ACTION', required=True)
        parsers = {}
        for name, help_text in actions:
            subparser = subparsers.add_parser(name, help=help_text,
                                              called_from_command_line=parser.called_from_command_line)
            self.add_output_arguments(subparser)
            parsers[name] = subparser
        return parsers

    def handle(self, *args, **options):
        self.as_json = options.get('json', False)
        verbosity = options.get('verbosity', 1)
        if verbosity > 1:
            logging.getLogger('cosmetic').setLevel(logging.DEBUG if verbosity > 2 else logging.INFO)

        action = options.get('action')
        if action is None:
            handler = self.run
        else:
            handler = getattr(self, 'handle_%s' % action.replace('-', '_'))
        logger.debug('running %s %s' % (self.__module__.rsplit('.', 1)[-1], action or ''))

        try:
            handler(**options)
        except LiteralError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE_ERROR)
        except CosmeticError as e:
            raise CommandError(str(e), returncode=EXIT_DOMAIN_ERROR)
        except OverflowError as e:
            raise CommandError('overflow: %s' % e, returncode=EXIT_OVERFLOW)
        except ValueError as e:
            # a result past the interpreter's integer string limit
            if 'integer string conversion' not in str(e):
                raise
            raise CommandError('overflow: %s' % e, returncode=EXIT_OVERFLOW)

    def run(self, **options):
        raise NotImplementedError('subclasses of CosmeticCommand must provide a run() method')

    def emit(self, text, payload):
        """Writes one line: ``text``, or ``payload`` as JSON with --json.
        """
        if self.as_json:
            self.stdout.write(json.dumps(payload))
        else:
            self.stdout.write(text)
