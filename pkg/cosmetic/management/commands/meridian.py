# -*- coding: utf-8 -*-
from cosmetic.filling import reduced_meridian
from cosmetic.management.commands._base import CosmeticCommand
from cosmetic.slopes import parse_slope


class Command(CosmeticCommand):
    help = '''Meridian p/(k^2 q) after p/q surgery on a knot of winding number k in a solid torus'''

    def add_arguments(self, parser):
        parser.add_argument('surgery', help='Surgery slope p/q')
        parser.add_argument('--winding', '-k', type=int, required=True, help='Winding number k')
        self.add_output_arguments(parser)

    def run(self, **options):
        surgery = parse_slope(options['surgery'])
        winding = options['winding']
        meridian, reduction = reduced_meridian(surgery, winding)
        self.emit(str(meridian), {'surgery': str(surgery), 'winding': winding, 'meridian': str(meridian),
                                  'reduction': reduction})
