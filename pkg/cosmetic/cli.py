"""The ``cosmetic`` console script: ``cosmetic VERB ...`` runs the management
command ``VERB`` of this app without a host project.
"""
import os
import sys

import django
from django.core.management import get_commands, load_command_class

APP = 'cosmetic'


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    # Slopes and orders are unbounded; CPython 3.11+ caps int <-> str at 4300 digits.
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cosmetic.settings')
    django.setup()

    verbs = sorted(name for name, app in get_commands().items() if app == APP)
    usage = 'usage: cosmetic {%s} ...\n' % ','.join(verbs)
    if argv and argv[0] in ('-h', '--help'):
        sys.stdout.write(usage)
        return 0
    if not argv or argv[0] not in verbs:
        sys.stderr.write(usage)
        return 2

    command = load_command_class(APP, argv[0])
    command.run_from_argv(['cosmetic', argv[0]] + argv[1:])
    return 0


if __name__ == '__main__':
    sys.exit(main())
