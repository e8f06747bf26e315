# -*- coding: utf-8 -*-
from cosmetic.braids import type_iv_family
from cosmetic.management.commands._base import CosmeticCommand
from cosmetic.utils import parse_range


class Command(CosmeticCommand):
    help = '''Members of the Type-IV braid family'''

    def add_arguments(self, parser):
        parsers = self.add_actions(parser, (
            ('type-iv', 'Records for the family indices A..B'),
        ))
        parsers['type-iv'].add_argument('--k', dest='k_range', default='1..1', help='Index range A..B')

    def handle_type_iv(self, **options):
        start, stop = parse_range(options['k_range'])
        for k in range(start, stop + 1):
            record = type_iv_family(k)
            plus, minus = record.pair_plus, record.pair_minus
            self.emit(
                'k=%d s=%d t=%d u=%d word=%s plus=%s,%s minus=%s,%s' % (
                    k, record.s, record.t, record.u, record.word, plus[0], plus[1], minus[0], minus[1]),
                {'k': k, 's': record.s, 't': record.t, 'u': record.u, 'word': str(record.word),
                 'strands': record.word.strands,
                 'pair_plus': [str(lens) for lens in plus], 'pair_minus': [str(lens) for lens in minus],
                 'family_is_non_example': record.family_is_non_example},
            )
