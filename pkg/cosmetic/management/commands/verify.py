# -*- coding: utf-8 -*-
from django.core.management.base import CommandError

from cosmetic.conf import settings
from cosmetic.management.commands._base import EXIT_DOMAIN_ERROR, CosmeticCommand
from cosmetic.verification import run_target


class Command(CosmeticCommand):
    help = '''Reproduces the published computations; exits 0 iff every check passes'''

    def add_arguments(self, parser):
        parsers = self.add_actions(parser, (
            ('paper-example', 'The L(49,18) construction, its 37/98 variant and the trefoil distances'),
            ('type-iv', 'The Type-IV family identities'),
            ('heegaard-swap', 'The Heegaard swap partition of the units'),
        ))
        parsers['type-iv'].add_argument('--k-max', dest='k_max', type=int, default=None)
        parsers['heegaard-swap'].add_argument('--max-p', dest='max_p', type=int, default=None)

    def verify(self, name, **bounds):
        checks = run_target(name, **bounds)
        failed = 0
        for check in checks:
            failed += not check.passed
            status = 'ok' if check.passed else 'FAIL'
            text = '%-4s %s' % (status, check.name)
            if check.detail:
                text += ' (%s)' % check.detail
            self.emit(text, {'target': name, 'check': check.name, 'passed': check.passed, 'detail': check.detail})
        if not self.as_json:
            self.stdout.write('%s: %d/%d passed' % (name, len(checks) - failed, len(checks)))
        if failed:
            raise CommandError('%d of %d checks failed' % (failed, len(checks)), returncode=EXIT_DOMAIN_ERROR)

    def handle_paper_example(self, **options):
        self.verify('paper-example')

    def handle_type_iv(self, **options):
        k_max = options['k_max']
        if k_max is None:
            k_max = settings.COSMETIC_FAMILY_K_MAX
        self.verify('type-iv', k_max=k_max)

    def handle_heegaard_swap(self, **options):
        max_p = options['max_p']
        if max_p is None:
            max_p = settings.COSMETIC_SWAP_MAX_P
        self.verify('heegaard-swap', max_p=max_p)
