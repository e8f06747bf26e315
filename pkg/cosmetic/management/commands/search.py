# -*- coding: utf-8 -*-
import logging

from cosmetic.management.commands._base import CosmeticCommand
from cosmetic.search import heegaard_swap_pairs, report_to_json, report_to_text, scan_meridians, scan_type_iv
from cosmetic.signals import candidate_found

logger = logging.getLogger(__name__)


class Command(CosmeticCommand):
    help = '''Searches for cosmetic filling candidates'''

    def add_arguments(self, parser):
        parsers = self.add_actions(parser, (
            ('meridians', 'Scan pairs of meridian slopes'),
            ('type-iv', 'Reports of the Type-IV family'),
            ('swaps', 'Heegaard swap pairs q, q\' with q*q\' = 1 mod p'),
        ))
        parsers['meridians'].add_argument('--max-p', dest='max_p', type=int, required=True,
                                          help='Largest distance reported')
        parsers['meridians'].add_argument('--max-den', dest='max_den', type=int, required=True,
                                          help='Largest meridian denominator')
        parsers['meridians'].add_argument('--max-num', dest='max_num', type=int, default=None,
                                          help='Largest meridian numerator magnitude (default: --max-den)')
        parsers['meridians'].add_argument('--workers', type=int, default=None,
                                          help='Worker processes (default: COSMETIC_SEARCH_WORKERS)')
        parsers['type-iv'].add_argument('--k-max', dest='k_max', type=int, required=True)
        parsers['swaps'].add_argument('--p', dest='p', type=int, required=True)

    def log_candidate(self, sender, report, **kwargs):
        logger.debug('candidate %s' % report_to_text(report))

    def write_reports(self, reports):
        candidate_found.connect(self.log_candidate, weak=False, dispatch_uid='cosmetic-search-command')
        try:
            for report in reports:
                self.stdout.write(report_to_json(report) if self.as_json else report_to_text(report))
        finally:
            candidate_found.disconnect(dispatch_uid='cosmetic-search-command')

    def handle_meridians(self, **options):
        self.write_reports(scan_meridians(options['max_p'], options['max_den'], max_numerator=options['max_num'],
                                          workers=options['workers']))

    def handle_type_iv(self, **options):
        self.write_reports(scan_type_iv(options['k_max']))

    def handle_swaps(self, **options):
        for q, inverse in heegaard_swap_pairs(options['p']):
            self.emit('%d %d' % (q, inverse), {'p': options['p'], 'q': q, 'q_prime': inverse})
