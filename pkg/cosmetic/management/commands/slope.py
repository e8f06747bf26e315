# -*- coding: utf-8 -*-
from cosmetic.management.commands._base import CosmeticCommand
from cosmetic.slopes import (UnimodularMap, apply_map, complete_to_unimodular, distance, equidistant_slopes, negate,
                             parse_slope)


class Command(CosmeticCommand):
    help = '''Slope arithmetic on the boundary torus. Slopes starting with "-" go after "--".'''

    def add_arguments(self, parser):
        parsers = self.add_actions(parser, (
            ('distance', 'Distance of two slopes'),
            ('equidistant', 'The two slopes equidistant from two slopes, difference slope first'),
            ('negate', 'The slope -a/b'),
            ('canonical', 'The canonical form of a slope'),
            ('apply', 'Image of a slope under a unimodular map'),
            ('complete', 'Determinant 1 completion (a*, b*) of a slope'),
        ))
        for name in ('distance', 'equidistant'):
            parsers[name].add_argument('first')
            parsers[name].add_argument('second')
        for name in ('negate', 'canonical', 'apply', 'complete'):
            parsers[name].add_argument('slope')
        parsers['apply'].add_argument('--matrix', nargs=4, type=int, required=True,
                                      metavar=('M11', 'M12', 'M21', 'M22'), help='Matrix entries, row by row')
        for subparser in parsers.values():
            subparser.add_argument('--reduce', action='store_true', default=None,
                                   help='Accept non-reduced slopes like 2/4')

    def slope(self, text, options):
        return parse_slope(text, reduce=options['reduce'])

    def handle_distance(self, **options):
        first, second = self.slope(options['first'], options), self.slope(options['second'], options)
        d = distance(first, second)
        self.emit(str(d), {'first': str(first), 'second': str(second), 'distance': d})

    def handle_equidistant(self, **options):
        first, second = self.slope(options['first'], options), self.slope(options['second'], options)
        difference, total = equidistant_slopes(first, second)
        self.emit('%s %s' % (difference, total), {'difference': str(difference), 'sum': str(total)})

    def handle_negate(self, **options):
        r = negate(self.slope(options['slope'], options))
        self.emit(str(r), {'slope': str(r)})

    def handle_canonical(self, **options):
        r = self.slope(options['slope'], options)
        self.emit(str(r), {'slope': str(r)})

    def handle_apply(self, **options):
        m = UnimodularMap(*options['matrix'])
        r = apply_map(m, self.slope(options['slope'], options))
        self.emit(str(r), {'matrix': str(m), 'slope': str(r)})

    def handle_complete(self, **options):
        r = self.slope(options['slope'], options)
        m = complete_to_unimodular(r)
        a_star, b_star = m.columns[0]
        self.emit('%d %d' % (a_star, b_star), {'slope': str(r), 'a_star': a_star, 'b_star': b_star})
