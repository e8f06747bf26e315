# -*- coding: utf-8 -*-
from cosmetic.lens import (homotopy_witness, is_amphicheiral, is_homeo, is_oriented_homeo, mod_inverse,
                           parse_lens, reverse)
from cosmetic.management.commands._base import CosmeticCommand
from cosmetic.search import classify_pair


def _bool(value):
    return 'true' if value else 'false'


class Command(CosmeticCommand):
    help = '''Lens space classification: L(p,q) literals, quoted on the shell'''

    def add_arguments(self, parser):
        parsers = self.add_actions(parser, (
            ('classify', 'truly, reflectively, both or neither'),
            ('amphicheiral', 'Whether L admits an orientation reversing self-homeomorphism'),
            ('homotopy', 'Whether two lens spaces are homotopy equivalent'),
            ('homeo', 'Whether two lens spaces are homeomorphic'),
            ('canonical', 'The canonical form of a lens literal'),
            ('reverse', 'The oppositely oriented lens space'),
            ('inverse', 'The inverse of q mod p'),
        ))
        for name in ('classify', 'homotopy', 'homeo'):
            parsers[name].add_argument('first')
            parsers[name].add_argument('second')
        for name in ('homotopy', 'homeo'):
            parsers[name].add_argument('--oriented', action='store_true', default=False,
                                       help='Require the equivalence to preserve orientation')
        for name in ('amphicheiral', 'canonical', 'reverse'):
            parsers[name].add_argument('lens')
        parsers['inverse'].add_argument('q', type=int)
        parsers['inverse'].add_argument('p', type=int)

    def pair(self, options):
        return parse_lens(options['first']), parse_lens(options['second'])

    def handle_classify(self, **options):
        first, second = self.pair(options)
        classification = classify_pair(first, second)
        self.emit(str(classification), {'first': str(first), 'second': str(second),
                                        'classification': classification.value})

    def handle_amphicheiral(self, **options):
        lens = parse_lens(options['lens'])
        result = is_amphicheiral(lens)
        self.emit(_bool(result), {'lens': str(lens), 'amphicheiral': result})

    def handle_homotopy(self, **options):
        first, second = self.pair(options)
        witness = homotopy_witness(first, second, oriented=options['oriented'])
        self.emit(_bool(witness is not None), {
            'first': str(first), 'second': str(second), 'oriented': options['oriented'],
            'homotopy_equivalent': witness is not None,
            'witness': None if witness is None else {'n': witness[0], 'sign': witness[1]},
        })

    def handle_homeo(self, **options):
        first, second = self.pair(options)
        predicate = is_oriented_homeo if options['oriented'] else is_homeo
        result = predicate(first, second)
        self.emit(_bool(result), {'first': str(first), 'second': str(second), 'oriented': options['oriented'],
                                  'homeomorphic': result})

    def handle_canonical(self, **options):
        lens = parse_lens(options['lens'])
        self.emit(str(lens), {'lens': str(lens), 'name': lens.name})

    def handle_reverse(self, **options):
        lens = reverse(parse_lens(options['lens']))
        self.emit(str(lens), {'lens': str(lens)})

    def handle_inverse(self, **options):
        inverse = mod_inverse(options['q'], options['p'])
        self.emit(str(inverse), {'q': options['q'], 'p': options['p'], 'inverse': inverse})
