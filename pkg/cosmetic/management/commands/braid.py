# -*- coding: utf-8 -*-
from cosmetic.braids import cycles, is_knot, parse_braid, permutation_of, winding_number
from cosmetic.management.commands._base import CosmeticCommand


class Command(CosmeticCommand):
    help = '''Closed braids in a solid torus, written like "W3^-1 W7^3"'''

    def add_arguments(self, parser):
        parsers = self.add_actions(parser, (
            ('permutation', 'The permutation of the strands, in cycle notation'),
            ('knot', 'Whether the closed braid is a knot'),
            ('winding', 'The winding number in the solid torus'),
        ))
        for subparser in parsers.values():
            subparser.add_argument('word', nargs='+', help='Braid tokens Wn^e')
            subparser.add_argument('--strands', type=int, default=None,
                                   help='Strand count; defaults to the largest token index')

    def word(self, options):
        return parse_braid(' '.join(options['word']), strands=options['strands'])

    def handle_permutation(self, **options):
        word = self.word(options)
        permutation = permutation_of(word)
        text = ''.join('(%s)' % ' '.join(map(str, cycle)) for cycle in cycles(permutation))
        self.emit(text, {'word': str(word), 'strands': word.strands, 'images': list(permutation),
                         'cycles': [list(cycle) for cycle in cycles(permutation)]})

    def handle_knot(self, **options):
        word = self.word(options)
        result = is_knot(word)
        self.emit('true' if result else 'false', {'word': str(word), 'strands': word.strands, 'knot': result})

    def handle_winding(self, **options):
        word = self.word(options)
        self.emit(str(winding_number(word)), {'word': str(word), 'winding': winding_number(word)})
