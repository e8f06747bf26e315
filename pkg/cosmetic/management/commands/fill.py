# -*- coding: utf-8 -*-
from cosmetic.filling import fill_two_sided
from cosmetic.management.commands._base import CosmeticCommand
from cosmetic.slopes import distance, parse_slope


class Command(CosmeticCommand):
    help = '''Lens space obtained by filling both sides of T2 x I along two slopes'''

    def add_arguments(self, parser):
        parser.add_argument('first', help='Slope of the first filling, e.g. 18/49')
        parser.add_argument('second', help='Slope of the second filling, e.g. 1/0')
        self.add_output_arguments(parser)

    def run(self, **options):
        first, second = parse_slope(options['first']), parse_slope(options['second'])
        lens = fill_two_sided(first, second)
        self.emit(str(lens), {'first': str(first), 'second': str(second), 'lens': str(lens),
                              'distance': distance(first, second)})
