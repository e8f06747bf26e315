# python imports
import json
import math
import random
import sys
from contextlib import contextmanager, redirect_stdout
from io import StringIO
from unittest import skipUnless

# django imports
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from django.test.utils import override_settings

# cosmetic imports
from cosmetic.braids import (BraidWord, compose, cycle_type, cycles, is_knot, paper_example, parse_braid,
                             permutation_of, permutation_of_letters, reverse_orientation, sigma_word,
                             type_iv_family, winding_number)
from cosmetic.cli import main
from cosmetic.exceptions import (BraidError, CosmeticError, DegenerateSlopeError, EqualSlopesError,
                                 FamilyIndexError, LiteralError, NotAUnitError, NotCoprimeError,
                                 NotUnimodularError, WindingNumberError)
from cosmetic.filling import (fill_two_sided, gordon_meridian, gordon_reduction, lens_from_construction,
                              reduced_meridian, surgery_lens)
from cosmetic.lens import (LensSpace, homotopy_witness, is_amphicheiral, is_homeo, is_homotopy_equivalent,
                           is_oriented_homeo, make_lens, mod_inverse, parse_lens, reverse)
from cosmetic.search import (Classification, bounded_slopes, check_report, classify_pair, evaluate_construction,
                             heegaard_swap_pairs, negation_meridians, report_to_json, scan_meridians,
                             scan_type_iv, self_inverse_units)
from cosmetic.signals import candidate_found, scan_finished
from cosmetic.slopes import (IDENTITY, MERIDIAN, Slope, UnimodularMap, apply_map, complete_to_unimodular,
                             completion_inverse, distance, equidistant_slopes, make_slope, negate, parse_slope)
from cosmetic.utils import is_coprime, parse_int, parse_range, squares, units, xgcd
from cosmetic.verification import run_target, verify_heegaard_swap, verify_paper_example, verify_type_iv

SEED = 20240601

HAS_DIGIT_LIMIT = hasattr(sys, 'set_int_max_str_digits')

# longer than the 4300 digits CPython converts by default
LONG_INTEGER = '7' * 5000


class UtilsTestCase(SimpleTestCase):
    """Tests the integer helpers.
    """
    def test_xgcd(self):
        rng = random.Random(SEED)
        for _ in range(1000):
            a, b = rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)
            g, x, y = xgcd(a, b)
            self.assertEqual(g, math.gcd(a, b))
            self.assertEqual(a * x + b * y, g)

        self.assertEqual(xgcd(0, 0), (0, 1, 0))
        self.assertEqual(xgcd(0, -5)[0], 5)

    def test_is_coprime(self):
        self.assertTrue(is_coprime(18, 49))
        self.assertTrue(is_coprime(0, -1))
        self.assertFalse(is_coprime(0, 2))
        self.assertFalse(is_coprime(0, 0))

    def test_units(self):
        self.assertEqual(units(1), [0])
        self.assertEqual(units(2), [1])
        self.assertEqual(units(12), [1, 5, 7, 11])

    def test_squares(self):
        self.assertEqual(squares(7), {0, 1, 2, 4})
        self.assertIn(46, squares(49))
        self.assertNotIn(3, squares(49))

    def test_parse_range(self):
        self.assertEqual(parse_range('1..10'), (1, 10))
        self.assertEqual(parse_range('4'), (4, 4))
        self.assertRaises(LiteralError, parse_range, '3..1')
        self.assertRaises(LiteralError, parse_range, 'a..b')
        self.assertRaises(LiteralError, parse_range, '1...3')

    def test_parse_int(self):
        self.assertEqual(parse_int('-42', '-42/1'), -42)
        self.assertRaises(LiteralError, parse_int, '4x', '4x/1')

    @skipUnless(HAS_DIGIT_LIMIT, 'no integer string limit on this interpreter')
    def test_parse_int_digit_limit(self):
        with int_digit_limit(4300):
            self.assertRaises(LiteralError, parse_int, LONG_INTEGER, LONG_INTEGER)
        with int_digit_limit(0):
            self.assertEqual(parse_int(LONG_INTEGER, LONG_INTEGER), int(LONG_INTEGER))


class SlopeTestCase(SimpleTestCase):
    """Tests parsing, canonical forms and the arithmetic of slopes.
    """
    def test_canonical(self):
        self.assertEqual(Slope(3, -5), Slope(-3, 5))
        self.assertEqual(Slope(3, -5).a, -3)
        self.assertEqual(Slope(-1, 0), MERIDIAN)
        self.assertEqual(Slope(-7, -2), Slope(7, 2))
        self.assertEqual(str(Slope(18, 49)), '18/49')
        self.assertEqual(tuple(Slope(0, -1)), (0, 1))

    def test_invalid(self):
        self.assertRaises(DegenerateSlopeError, Slope, 0, 0)
        self.assertRaises(NotCoprimeError, Slope, 2, 4)
        self.assertRaises(NotCoprimeError, Slope, 0, 2)
        self.assertRaises(NotCoprimeError, make_slope, 6, 9)
        self.assertEqual(make_slope(6, 9, reduce=True), Slope(2, 3))
        self.assertEqual(make_slope(-4, 0, reduce=True), MERIDIAN)

    def test_parse_slope(self):
        self.assertEqual(parse_slope('18/49'), Slope(18, 49))
        self.assertEqual(parse_slope('-1/0'), MERIDIAN)
        self.assertEqual(parse_slope('19/1'), Slope(19, 1))
        self.assertEqual(parse_slope(' 3 / -5 '), Slope(-3, 5))

        for text in ('abc', '1/', '/2', '1.5/2', '1/2/3', ''):
            self.assertRaises(LiteralError, parse_slope, text)

        self.assertRaises(DegenerateSlopeError, parse_slope, '0/0')
        self.assertRaises(NotCoprimeError, parse_slope, '2/4')
        self.assertEqual(parse_slope('2/4', reduce=True), Slope(1, 2))

    @override_settings(COSMETIC_REDUCE_SLOPES=True)
    def test_parse_slope_reduce_setting(self):
        self.assertEqual(parse_slope('2/4'), Slope(1, 2))
        self.assertRaises(NotCoprimeError, parse_slope, '2/4', reduce=False)

    @skipUnless(HAS_DIGIT_LIMIT, 'no integer string limit on this interpreter')
    def test_long_literals(self):
        with int_digit_limit(4300):
            self.assertRaises(LiteralError, parse_slope, LONG_INTEGER + '/1')
            self.assertRaises(LiteralError, parse_slope, '1/' + LONG_INTEGER)
            self.assertRaises(LiteralError, parse_lens, 'L(%s,1)' % LONG_INTEGER)
            self.assertRaises(LiteralError, parse_braid, 'W3^' + LONG_INTEGER)
        with int_digit_limit(0):
            self.assertEqual(parse_slope(LONG_INTEGER + '/1').a, int(LONG_INTEGER))

    def test_distance(self):
        self.assertEqual(distance(Slope(18, 49), Slope(19, 49)), 49)
        self.assertEqual(distance(Slope(18, 49), MERIDIAN), 49)
        self.assertEqual(distance(MERIDIAN, MERIDIAN), 0)
        self.assertEqual(distance(Slope(9, 1), MERIDIAN), 1)
        self.assertEqual(distance(Slope(9, 2), MERIDIAN), 2)

        rng = random.Random(SEED)
        for _ in range(1000):
            r1, r2 = random_slope(rng), random_slope(rng)
            self.assertEqual(distance(r1, r2), distance(r2, r1))
            self.assertEqual(distance(r1, r2) == 0, r1 == r2)

    def test_negate(self):
        self.assertEqual(negate(Slope(9, 1)), Slope(-9, 1))
        self.assertEqual(negate(MERIDIAN), MERIDIAN)
        self.assertEqual(negate(Slope(0, 1)), Slope(0, 1))

        rng = random.Random(SEED)
        for _ in range(1000):
            r = random_slope(rng)
            self.assertEqual(negate(negate(r)), r)
            self.assertEqual(distance(r, MERIDIAN), distance(negate(r), MERIDIAN))

    def test_equidistant(self):
        self.assertEqual(equidistant_slopes(Slope(18, 49), Slope(19, 49)), (MERIDIAN, Slope(37, 98)))
        self.assertEqual(set(equidistant_slopes(MERIDIAN, Slope(0, 1))), {Slope(1, 1), Slope(1, -1)})
        self.assertRaises(EqualSlopesError, equidistant_slopes, Slope(3, 5), make_slope(-3, -5))

    def test_equidistant_properties(self):
        rng = random.Random(SEED)
        for _ in range(1000):
            r1, r2 = random_slope(rng), random_slope(rng)
            if r1 == r2:
                continue
            outers = equidistant_slopes(r1, r2)
            self.assertNotEqual(outers[0], outers[1])
            for outer in outers:
                self.assertEqual(distance(outer, r1), distance(outer, r2))

            # the other sign representative of r2 swaps the two outputs
            flipped = {make_slope(r1.a + r2.a, r1.b + r2.b, reduce=True),
                       make_slope(r1.a - r2.a, r1.b - r2.b, reduce=True)}
            self.assertEqual(set(outers), flipped)

    def test_unimodular_map(self):
        self.assertRaises(NotUnimodularError, UnimodularMap, 2, 0, 0, 1)
        m = UnimodularMap(2, 1, 1, 1)
        self.assertEqual(m @ m.inverse(), IDENTITY)
        self.assertEqual(apply_map(IDENTITY, Slope(18, 49)), Slope(18, 49))
        self.assertEqual(apply_map(UnimodularMap(1, 0, 0, -1), Slope(9, 2)), Slope(-9, 2))

        rng = random.Random(SEED)
        for _ in range(1000):
            m = random_map(rng)
            self.assertIn(m.det, (1, -1))
            r1, r2 = random_slope(rng, 50), random_slope(rng, 50)
            self.assertEqual(distance(apply_map(m, r1), apply_map(m, r2)), distance(r1, r2))
            self.assertEqual(m.inverse().apply(m.apply(r1)), r1)

    def test_complete_to_unimodular(self):
        m = complete_to_unimodular(Slope(0, 1))
        self.assertEqual(m.columns, ((1, 0), (0, 1)))

        m = complete_to_unimodular(Slope(18, 49))
        self.assertEqual(m.columns[0], (7, 19))

        m = complete_to_unimodular(MERIDIAN)
        self.assertEqual(m.det, 1)
        self.assertEqual(m.columns, ((0, -1), (1, 0)))

        rng = random.Random(SEED)
        for _ in range(1000):
            r = random_slope(rng)
            m = complete_to_unimodular(r)
            a_star, b_star = m.columns[0]
            self.assertEqual(m.det, 1)
            self.assertEqual(m.columns[1], (r.a, r.b))
            if r.b > 0:
                self.assertTrue(0 <= b_star < r.b)
            self.assertEqual(apply_map(completion_inverse(r), r), Slope(0, 1))


class LensSpaceTestCase(SimpleTestCase):
    """Tests canonical lens spaces and the classification predicates.
    """
    def test_make_lens(self):
        self.assertEqual(make_lens(49, -18), LensSpace(49, 31))
        self.assertEqual(make_lens(49, -19), LensSpace(49, 30))
        self.assertEqual(make_lens(-49, 20), LensSpace(49, 29))
        self.assertEqual(make_lens(0, 1), LensSpace(0, 1))
        self.assertEqual(make_lens(0, -1), LensSpace(0, 1))
        for n in range(-5, 6):
            self.assertEqual(make_lens(1, n), LensSpace(1, 0))
        for q in range(-30, 30):
            if math.gcd(17, q) == 1:
                self.assertEqual(make_lens(17, q), make_lens(17, q + 17))

        self.assertRaises(NotCoprimeError, make_lens, 6, 4)
        self.assertRaises(NotCoprimeError, make_lens, 0, 2)
        self.assertRaises(CosmeticError, LensSpace, 49, 50)
        self.assertRaises(CosmeticError, LensSpace, 0, 0)

    def test_names(self):
        self.assertEqual(LensSpace(0, 1).name, 'S2xS1')
        self.assertEqual(LensSpace(1, 0).name, 'S3')
        self.assertEqual(LensSpace(2, 1).name, 'RP3')
        self.assertEqual(LensSpace(49, 18).name, 'L(49,18)')

    def test_parse_lens(self):
        self.assertEqual(parse_lens('L(49,-18)'), LensSpace(49, 31))
        self.assertEqual(parse_lens(' L( 17 , 9 ) '), LensSpace(17, 9))
        for text in ('L(49,-18', 'M(2,1)', 'L(2;1)', ''):
            self.assertRaises(LiteralError, parse_lens, text)
        self.assertRaises(NotCoprimeError, parse_lens, 'L(6,4)')

    def test_reverse(self):
        self.assertEqual(reverse(LensSpace(49, 18)), LensSpace(49, 31))
        self.assertEqual(reverse(LensSpace(2, 1)), LensSpace(2, 1))
        self.assertEqual(reverse(LensSpace(0, 1)), LensSpace(0, 1))
        self.assertEqual(reverse(LensSpace(1, 0)), LensSpace(1, 0))
        for lens in all_lens_spaces(30):
            self.assertEqual(reverse(reverse(lens)), lens)

    def test_mod_inverse(self):
        self.assertEqual(mod_inverse(18, 49), 30)
        self.assertEqual(mod_inverse(2, 17), 9)
        self.assertEqual(mod_inverse(5, 1), 0)
        for p in range(2, 21):
            self.assertEqual(mod_inverse(1, p), 1)
        self.assertRaises(NotAUnitError, mod_inverse, 2, 4)
        self.assertRaises(NotAUnitError, mod_inverse, 1, 0)

    def test_oriented_homeo(self):
        self.assertTrue(is_oriented_homeo(LensSpace(17, 2), LensSpace(17, 9)))
        self.assertFalse(is_oriented_homeo(LensSpace(49, 30), LensSpace(49, 31)))
        self.assertFalse(is_oriented_homeo(LensSpace(5, 1), LensSpace(7, 1)))

    def test_homeo(self):
        self.assertTrue(is_homeo(LensSpace(49, 30), LensSpace(49, 31)))
        self.assertFalse(is_homeo(LensSpace(7, 1), LensSpace(7, 2)))
        self.assertTrue(is_homeo(LensSpace(49, 18), reverse(LensSpace(49, 18))))

    def test_amphicheiral(self):
        self.assertTrue(is_amphicheiral(LensSpace(1, 0)))
        self.assertTrue(is_amphicheiral(LensSpace(0, 1)))
        self.assertTrue(is_amphicheiral(LensSpace(2, 1)))
        self.assertTrue(is_amphicheiral(LensSpace(5, 2)))
        self.assertTrue(is_amphicheiral(LensSpace(10, 3)))
        self.assertFalse(is_amphicheiral(LensSpace(3, 1)))
        self.assertFalse(is_amphicheiral(LensSpace(49, 18)))

    def test_homotopy(self):
        first, second = LensSpace(49, 32), LensSpace(49, 20)
        self.assertFalse(is_homeo(first, second))
        self.assertTrue(is_homotopy_equivalent(first, second))
        self.assertEqual(homotopy_witness(first, second), (12, -1))
        self.assertFalse(is_homotopy_equivalent(first, second, oriented=True))
        self.assertEqual(homotopy_witness(first, reverse(second), oriented=True), (12, 1))

        self.assertFalse(is_homotopy_equivalent(LensSpace(5, 1), LensSpace(5, 2)))
        self.assertFalse(is_homotopy_equivalent(LensSpace(5, 1), LensSpace(7, 1)))
        self.assertEqual(homotopy_witness(LensSpace(1, 0), LensSpace(1, 0)), (1, 1))

    def test_homeo_equivalences(self):
        """Both homeomorphism relations are equivalence relations, and the
        unoriented one is the oriented one up to reversing the second space.
        """
        spaces = all_lens_spaces(60)
        for relation in (is_oriented_homeo, is_homeo):
            assert_equivalence_relation(self, relation, spaces)

        for first in spaces:
            for second in spaces:
                if first.p != second.p:
                    continue
                self.assertEqual(
                    is_homeo(first, second),
                    is_oriented_homeo(first, second) or is_oriented_homeo(first, reverse(second)))
                if is_oriented_homeo(first, second):
                    self.assertTrue(is_homotopy_equivalent(first, second, oriented=True))
                if is_homeo(first, second):
                    self.assertTrue(is_homotopy_equivalent(first, second))
            self.assertEqual(is_amphicheiral(first),
                             is_oriented_homeo(first, reverse(first)))

    def test_homotopy_equivalence(self):
        spaces = all_lens_spaces(30)
        assert_equivalence_relation(self, is_homotopy_equivalent, spaces)
        for first in spaces:
            for second in spaces:
                for oriented in (False, True):
                    self.assertEqual(is_homotopy_equivalent(first, second, oriented=oriented),
                                     homotopy_witness(first, second, oriented=oriented) is not None)


class FillingTestCase(SimpleTestCase):
    """Tests the two-sided filling and the meridians of surgered knots.
    """
    def test_fill(self):
        self.assertEqual(fill_two_sided(Slope(0, 1), Slope(7, 2)), LensSpace(7, 2))
        self.assertEqual(fill_two_sided(Slope(0, 1), Slope(5, -2)), LensSpace(5, 3))
        self.assertEqual(fill_two_sided(Slope(18, 49), MERIDIAN), LensSpace(49, 30))
        self.assertEqual(fill_two_sided(Slope(19, 49), MERIDIAN), LensSpace(49, 31))
        self.assertEqual(fill_two_sided(Slope(3, 5), Slope(3, 5)), LensSpace(0, 1))
        self.assertEqual(fill_two_sided(Slope(7, 2), Slope(0, 1)), LensSpace(7, 3))

    def test_construction(self):
        self.assertEqual(lens_from_construction(Slope(18, 49), Slope(37, 98)), LensSpace(49, 32))
        # -49 in the first coordinate, so the orientation flips to 29
        self.assertEqual(lens_from_construction(Slope(19, 49), Slope(37, 98)), LensSpace(49, 29))

    def test_surgery_lens(self):
        for n in range(-5, 6):
            self.assertEqual(surgery_lens(Slope(1, n)), LensSpace(1, 0))
        self.assertEqual(surgery_lens(Slope(0, 1)), LensSpace(0, 1))
        self.assertEqual(surgery_lens(Slope(17, 2)), LensSpace(17, 2))
        self.assertEqual(surgery_lens(Slope(-17, 2)), reverse(LensSpace(17, 2)))

    def test_order_is_distance(self):
        slopes = bounded_slopes(12)
        for r1 in slopes:
            for r2 in slopes:
                self.assertEqual(fill_two_sided(r1, r2).p, distance(r1, r2))

        rng = random.Random(SEED)
        for _ in range(10000):
            r1, r2 = random_slope(rng), random_slope(rng)
            self.assertEqual(fill_two_sided(r1, r2).p, distance(r1, r2))

    def test_completion_choice(self):
        rng = random.Random(SEED)
        for _ in range(500):
            r1, r2 = random_slope(rng, 100), random_slope(rng, 100)
            expected = fill_two_sided(r1, r2)
            a_star, b_star = complete_to_unimodular(r1).columns[0]
            for k in range(-3, 4):
                completion = UnimodularMap(a_star + k * r1.a, r1.a, b_star + k * r1.b, r1.b)
                self.assertEqual(fill_two_sided(r1, r2, completion=completion), expected)

        self.assertRaises(CosmeticError, fill_two_sided, Slope(18, 49), MERIDIAN, UnimodularMap(1, 0, 0, 1))

    def test_equivariance(self):
        rng = random.Random(SEED)
        for _ in range(1000):
            m = random_map(rng)
            r1, r2 = random_slope(rng, 30), random_slope(rng, 30)
            lens = fill_two_sided(r1, r2)
            image = fill_two_sided(apply_map(m, r1), apply_map(m, r2))
            if m.det == 1:
                self.assertEqual(image, lens)
            else:
                self.assertEqual(image, reverse(lens))

    def test_swap_sides(self):
        rng = random.Random(SEED)
        for _ in range(1000):
            r1, r2 = random_slope(rng, 100), random_slope(rng, 100)
            self.assertTrue(is_homeo(fill_two_sided(r1, r2), fill_two_sided(r2, r1)))

    def test_gordon_meridian(self):
        self.assertEqual(gordon_meridian(Slope(18, 1), 7), Slope(18, 49))
        self.assertEqual(gordon_meridian(Slope(19, 1), 7), Slope(19, 49))
        self.assertEqual(gordon_meridian(MERIDIAN, 7), MERIDIAN)
        self.assertEqual(gordon_meridian(Slope(5, 3), 1), Slope(5, 3))

        for winding in (0, -1, True, 2.0):
            self.assertRaises(WindingNumberError, gordon_meridian, Slope(18, 1), winding)

    def test_gordon_reduction(self):
        self.assertEqual(gordon_reduction(Slope(18, 1), 7), 1)
        self.assertEqual(gordon_reduction(Slope(14, 1), 7), 7)
        with self.assertLogs('cosmetic.filling', 'WARNING'):
            self.assertEqual(gordon_meridian(Slope(14, 1), 7), Slope(2, 7))

    def test_reduced_meridian(self):
        self.assertEqual(reduced_meridian(Slope(18, 1), 7), (Slope(18, 49), 1))
        self.assertEqual(reduced_meridian(Slope(14, 1), 7), (Slope(2, 7), 7))
        self.assertEqual(reduced_meridian(Slope(21, 2), 7), (Slope(3, 14), 7))
        self.assertEqual(reduced_meridian(MERIDIAN, 3), (MERIDIAN, 1))
        self.assertRaises(WindingNumberError, reduced_meridian, Slope(18, 1), 0)


class BraidTestCase(SimpleTestCase):
    """Tests braid words and the Type-IV family.
    """
    def test_parse_braid(self):
        self.assertEqual(parse_braid('W3^-1 W7^3'), BraidWord(7, ((3, -1), (7, 3))))
        self.assertEqual(parse_braid('W7'), BraidWord(7, ((7, 1),)))
        self.assertEqual(parse_braid('W_3^{-1}'), BraidWord(3, ((3, -1),)))
        self.assertEqual(parse_braid('', strands=4), BraidWord(4))
        self.assertEqual(str(parse_braid('W3^-1 W7^3')), 'W3^-1 W7^3')

        self.assertRaises(LiteralError, parse_braid, 'X3')
        self.assertRaises(LiteralError, parse_braid, '')
        self.assertRaises(BraidError, parse_braid, 'W8', strands=7)
        self.assertRaises(BraidError, parse_braid, 'W3^0')
        self.assertRaises(BraidError, parse_braid, 'W1')

    def test_permutation(self):
        word = paper_example().word
        self.assertEqual(permutation_of(word), (6, 4, 5, 7, 1, 2, 3))
        self.assertEqual(cycles(permutation_of(word)), [(1, 6, 2, 4, 7, 3, 5)])
        self.assertEqual(permutation_of(BraidWord(7, ((7, 1),))), (2, 3, 4, 5, 6, 7, 1))
        self.assertEqual(permutation_of(BraidWord(3)), (1, 2, 3))

    def test_token_order_matters(self):
        forward = permutation_of(parse_braid('W2 W3 W4'))
        backward = permutation_of(parse_braid('W4 W3 W2'))
        self.assertEqual(cycle_type(forward), (2, 2))
        self.assertEqual(cycle_type(backward), (3, 1))

    def test_is_knot(self):
        self.assertTrue(is_knot(paper_example().word))
        self.assertFalse(is_knot(BraidWord(3)))
        self.assertTrue(is_knot(BraidWord(1)))
        self.assertTrue(is_knot(parse_braid('W2')))
        self.assertFalse(is_knot(parse_braid('W2^2')))

    def test_winding(self):
        self.assertEqual(winding_number(paper_example().word), 7)
        self.assertEqual(winding_number(type_iv_family(3).word), type_iv_family(3).t)

    def test_homomorphism(self):
        rng = random.Random(SEED)
        for _ in range(500):
            strands = rng.randint(2, 9)
            first, second = random_word(rng, strands), random_word(rng, strands)
            self.assertEqual(permutation_of(first + second),
                             compose(permutation_of(first), permutation_of(second)))

    def test_generator_reading(self):
        rng = random.Random(SEED)
        for _ in range(500):
            word = random_word(rng, rng.randint(2, 9))
            permutation = permutation_of(word)
            self.assertEqual(permutation_of_letters(word.strands, sigma_word(word)), permutation)
            reversed_permutation = permutation_of_letters(word.strands, reverse_orientation(word))
            self.assertEqual(compose(permutation, reversed_permutation), tuple(range(1, word.strands + 1)))
            self.assertEqual(cycle_type(reversed_permutation), cycle_type(permutation))

    def test_type_iv_family(self):
        record = type_iv_family(1)
        self.assertEqual((record.s, record.t, record.u), (3, 4, 5))
        self.assertEqual(record.pair_plus, (LensSpace(8, 5), LensSpace(8, 3)))
        self.assertEqual(record.pair_minus, (LensSpace(2, 1), LensSpace(2, 1)))
        self.assertTrue(record.family_is_non_example)

        record = type_iv_family(2)
        self.assertEqual((record.s, record.t, record.u), (5, 12, 13))
        self.assertEqual(str(record.word), 'W5^1 W12^-5')
        self.assertEqual(record.word.strands, 12)
        self.assertEqual(record.pair_plus, (LensSpace(18, 7), LensSpace(18, 11)))
        self.assertEqual(record.pair_minus, (LensSpace(8, 3), LensSpace(8, 5)))

        for k in (0, -3, True, 1.0):
            self.assertRaises(FamilyIndexError, type_iv_family, k)

    def test_type_iv_identities(self):
        for k in range(1, 10001):
            record = type_iv_family(k)
            s, t, u = record.s, record.t, record.u
            self.assertEqual(s * s + t * t, u * u)
            self.assertEqual(u + s, 2 * (k + 1) ** 2)
            self.assertEqual(u - s, 2 * k * k)
            self.assertEqual(math.gcd(s, t), 1)
            for first, second in (record.pair_plus, record.pair_minus):
                self.assertTrue(is_oriented_homeo(first, reverse(second)))

    def test_paper_example(self):
        record = paper_example()
        self.assertEqual(record.winding, 7)
        self.assertEqual(record.special_slopes, (MERIDIAN, Slope(18, 1), Slope(19, 1)))
        self.assertEqual(record.surgery_slopes, (Slope(18, 1), Slope(19, 1)))
        self.assertTrue(record.hyperbolic_exterior)


class SearchTestCase(SimpleTestCase):
    """Tests classification, candidate reports and the scans.
    """
    def test_classify(self):
        self.assertEqual(classify_pair(LensSpace(49, 30), LensSpace(49, 31)), Classification.REFLECTIVELY)
        self.assertEqual(classify_pair(LensSpace(17, 2), LensSpace(17, 9)), Classification.TRULY)
        self.assertEqual(classify_pair(LensSpace(17, 2), LensSpace(17, 8)), Classification.REFLECTIVELY)
        self.assertEqual(classify_pair(LensSpace(5, 2), LensSpace(5, 3)), Classification.BOTH)
        self.assertEqual(classify_pair(LensSpace(7, 1), LensSpace(7, 2)), Classification.NEITHER)
        self.assertEqual(classify_pair(LensSpace(1, 0), LensSpace(1, 0)), Classification.BOTH)
        self.assertEqual(classify_pair(LensSpace(5, 1), LensSpace(7, 1)), Classification.NEITHER)

        for lens in all_lens_spaces(60):
            self.assertIn(classify_pair(lens, reverse(lens)), (Classification.REFLECTIVELY, Classification.BOTH))
            self.assertIn(classify_pair(lens, lens), (Classification.TRULY, Classification.BOTH))

    def test_classify_symmetric(self):
        by_order = {}
        for lens in all_lens_spaces(60):
            by_order.setdefault(lens.p, []).append(lens)
        for group in by_order.values():
            for first in group:
                for second in group:
                    self.assertEqual(classify_pair(first, second), classify_pair(second, first))

    def test_evaluate_construction(self):
        reports = evaluate_construction(Slope(18, 49), Slope(19, 49))
        self.assertEqual([report.outer for report in reports], [MERIDIAN, Slope(37, 98)])

        first, second = reports
        self.assertEqual(first.fills, (LensSpace(49, 30), LensSpace(49, 31)))
        self.assertEqual(first.dist, 49)
        self.assertEqual(first.classification, Classification.REFLECTIVELY)
        self.assertEqual(second.fills, (LensSpace(49, 32), LensSpace(49, 29)))
        self.assertEqual(second.classification, Classification.NEITHER)
        for report in reports:
            self.assertEqual(check_report(report), [])

        self.assertRaises(EqualSlopesError, evaluate_construction, Slope(1, 2), Slope(1, 2))

    def test_report_json(self):
        report = evaluate_construction(Slope(18, 49), Slope(19, 49))[0]
        data = json.loads(report_to_json(report))
        self.assertEqual(data['meridian1'], '18/49')
        self.assertEqual(data['meridian2'], '19/49')
        self.assertEqual(data['outer'], '1/0')
        self.assertEqual(data['fill1'], 'L(49,30)')
        self.assertEqual(data['fill2'], 'L(49,31)')
        self.assertEqual(data['dist'], 49)
        self.assertEqual(data['classification'], 'reflectively')
        self.assertFalse(data['family_is_non_example'])

    def test_check_report(self):
        report = evaluate_construction(Slope(18, 49), Slope(19, 49))[0]
        broken = report.__class__(report.meridians, report.outer, report.fills, 48, Classification.TRULY)
        problems = check_report(broken)
        self.assertTrue(problems)

    def test_bounded_slopes(self):
        slopes = bounded_slopes(2)
        self.assertEqual(slopes[0], Slope(-2, 1))
        self.assertIn(MERIDIAN, slopes)
        self.assertIn(Slope(1, 2), slopes)
        self.assertNotIn(Slope(3, 2), slopes)
        self.assertEqual(len(slopes), len(set(slopes)))
        self.assertIn(Slope(7, 1), bounded_slopes(1, max_numerator=7))

    def test_scan_meridians(self):
        reports = list(scan_meridians(5, 3))
        self.assertTrue(reports)
        self.assertEqual(reports, sorted(reports, key=lambda report: report.sort_key()))
        for report in reports:
            self.assertTrue(1 <= report.dist <= 5)
            self.assertNotEqual(report.classification, Classification.NEITHER)
            self.assertEqual(check_report(report), [])

    def test_scan_finds_construction(self):
        reports = [report for report in scan_meridians(49, 49, max_numerator=19)
                   if report.meridians == (Slope(18, 49), Slope(19, 49))]
        self.assertEqual([(report.outer, report.classification) for report in reports],
                         [(MERIDIAN, Classification.REFLECTIVELY)])
        self.assertEqual(reports[0].fills, (LensSpace(49, 30), LensSpace(49, 31)))

    def test_scan_distance_one(self):
        reports = list(scan_meridians(1, 3))
        self.assertTrue(reports)
        for report in reports:
            self.assertEqual(report.dist, 1)
            self.assertEqual(report.fills, (LensSpace(1, 0), LensSpace(1, 0)))

    def test_scan_workers(self):
        serial = list(scan_meridians(7, 4, workers=1))
        parallel = list(scan_meridians(7, 4, workers=2))
        self.assertEqual(serial, parallel)

    def test_scan_bounds(self):
        for args in ((0, 3), (3, 0), (3, -1), (True, 3)):
            self.assertRaises(CosmeticError, scan_meridians, *args)
        self.assertRaises(CosmeticError, scan_meridians, 3, 3, 0)
        self.assertRaises(CosmeticError, scan_type_iv, 0)

    def test_signals(self):
        received = []

        def on_candidate(sender, report, **kwargs):
            received.append(report)

        def on_finished(sender, name, count, **kwargs):
            received.append((name, count))

        candidate_found.connect(on_candidate)
        scan_finished.connect(on_finished)
        try:
            reports = list(scan_type_iv(2))
        finally:
            candidate_found.disconnect(on_candidate)
            scan_finished.disconnect(on_finished)

        self.assertEqual(received[:-1], reports)
        self.assertEqual(received[-1], ('type-iv', 4))

    def test_scan_type_iv(self):
        reports = list(scan_type_iv(3))
        self.assertEqual(len(reports), 6)
        first = reports[0]
        self.assertEqual(first.fills, (LensSpace(8, 5), LensSpace(8, 3)))
        self.assertEqual(first.outer, MERIDIAN)
        self.assertEqual(first.classification, Classification.REFLECTIVELY)
        self.assertTrue(first.family_is_non_example)
        self.assertEqual(reports[1].fills, (LensSpace(2, 1), LensSpace(2, 1)))
        self.assertEqual(reports[1].classification, Classification.BOTH)
        for report in reports:
            self.assertEqual(check_report(report), [])
            self.assertIn(report.classification, (Classification.REFLECTIVELY, Classification.BOTH))

    def test_negation_meridians(self):
        for lens in all_lens_spaces(40):
            if lens.p < 2:
                continue
            m1, m2 = negation_meridians(lens)
            self.assertEqual(lens_from_construction(m1, MERIDIAN), lens)
            self.assertEqual(lens_from_construction(m2, MERIDIAN), reverse(lens))

    def test_heegaard_swap(self):
        pairs = heegaard_swap_pairs(17)
        self.assertIn((2, 9), pairs)
        self.assertEqual(len(pairs), 7)
        self.assertEqual(self_inverse_units(17), [1, 16])
        self.assertEqual(heegaard_swap_pairs(2), [])
        self.assertRaises(CosmeticError, heegaard_swap_pairs, 1)

        for p in range(2, 501):
            covered = [q for pair in heegaard_swap_pairs(p) for q in pair] + self_inverse_units(p)
            self.assertEqual(sorted(covered), units(p))
            for q, inverse in heegaard_swap_pairs(p):
                self.assertEqual(q * inverse % p, 1)
                self.assertTrue(is_oriented_homeo(LensSpace(p, q), LensSpace(p, inverse)))


class VerificationTestCase(SimpleTestCase):
    """Tests the self-check targets.
    """
    def test_paper_example(self):
        checks = verify_paper_example()
        failed = [check for check in checks if not check.passed]
        self.assertEqual(failed, [])

        names = [check.name for check in checks]
        self.assertIn('distance=49', names)
        self.assertIn('pair=reflective', names)
        self.assertIn('witness 30*31=-1 mod 49', names)
        self.assertIn('equidistant=1/0,37/98', names)

    def test_targets(self):
        for name, bounds in (('paper-example', {}), ('type-iv', {'k_max': 200}),
                             ('heegaard-swap', {'max_p': 100})):
            checks = run_target(name, **bounds)
            self.assertTrue(checks)
            self.assertTrue(all(check.passed for check in checks), name)
        self.assertRaises(ValueError, run_target, 'nothing')

    def test_type_iv_and_swap(self):
        self.assertTrue(all(check.passed for check in verify_type_iv(10000)))
        self.assertTrue(all(check.passed for check in verify_heegaard_swap(500)))

    def test_bounds(self):
        for k_max in (0, -5, True, 2.0):
            self.assertRaises(CosmeticError, verify_type_iv, k_max)
        for max_p in (1, 0, -3):
            self.assertRaises(CosmeticError, verify_heegaard_swap, max_p)
        self.assertEqual(len(verify_type_iv(1)), 6)
        self.assertTrue(all(check.passed for check in verify_heegaard_swap(2)))


class CommandsTestCase(SimpleTestCase):
    """Tests the management commands behind the ``cosmetic`` script.
    """
    def test_slope(self):
        self.assertEqual(run_command('slope', 'distance', '18/49', '19/49'), ['49'])
        self.assertEqual(run_command('slope', 'distance', '1/0', '1/0'), ['0'])
        self.assertEqual(run_command('slope', 'equidistant', '18/49', '19/49'), ['1/0 37/98'])
        self.assertEqual(run_command('slope', 'negate', '9/1'), ['-9/1'])
        self.assertEqual(run_command('slope', 'canonical', '3/-5'), ['-3/5'])
        self.assertEqual(run_command('slope', 'canonical', '2/4', '--reduce'), ['1/2'])
        self.assertEqual(run_command('slope', 'complete', '18/49'), ['7 19'])
        self.assertEqual(run_command('slope', 'apply', '9/2', '--matrix', '1', '0', '0', '-1'), ['-9/2'])

    def test_slope_json(self):
        lines = run_command('slope', 'equidistant', '18/49', '19/49', '--json')
        self.assertEqual(json.loads(lines[0]), {'difference': '1/0', 'sum': '37/98'})

    def test_exit_codes(self):
        self.assertEqual(command_error('slope', 'distance', 'abc', '1/0').returncode, 2)
        self.assertEqual(command_error('slope', 'equidistant', '3/5', '3/5').returncode, 1)
        self.assertEqual(command_error('slope', 'canonical', '2/4').returncode, 1)
        self.assertEqual(command_error('lens', 'canonical', 'L(49,18').returncode, 2)
        self.assertEqual(command_error('meridian', '18/1', '--winding', '0').returncode, 1)
        self.assertEqual(command_error('slope', 'apply', '1/2', '--matrix', '2', '0', '0', '1').returncode, 1)

    def test_fill(self):
        self.assertEqual(run_command('fill', '18/49', '1/0'), ['L(49,30)'])
        self.assertEqual(run_command('fill', '0/1', '1/5'), ['L(1,0)'])
        self.assertEqual(run_command('fill', '3/5', '3/5'), ['L(0,1)'])
        data = json.loads(run_command('fill', '19/49', '1/0', '--json')[0])
        self.assertEqual(data['lens'], 'L(49,31)')
        self.assertEqual(data['distance'], 49)

    def test_meridian(self):
        self.assertEqual(run_command('meridian', '18/1', '--winding', '7'), ['18/49'])
        self.assertEqual(run_command('meridian', '19/1', '-k', '7'), ['19/49'])
        self.assertEqual(run_command('meridian', '1/0', '--winding', '7'), ['1/0'])

    def test_lens(self):
        self.assertEqual(run_command('lens', 'classify', 'L(49,30)', 'L(49,31)'), ['reflectively'])
        self.assertEqual(run_command('lens', 'classify', 'L(17,2)', 'L(17,9)'), ['truly'])
        self.assertEqual(run_command('lens', 'amphicheiral', 'L(5,2)'), ['true'])
        self.assertEqual(run_command('lens', 'homotopy', 'L(49,32)', 'L(49,20)'), ['true'])
        self.assertEqual(run_command('lens', 'homotopy', 'L(49,32)', 'L(49,20)', '--oriented'), ['false'])
        self.assertEqual(run_command('lens', 'homeo', 'L(49,30)', 'L(49,31)'), ['true'])
        self.assertEqual(run_command('lens', 'homeo', 'L(49,30)', 'L(49,31)', '--oriented'), ['false'])
        self.assertEqual(run_command('lens', 'canonical', 'L(49,-18)'), ['L(49,31)'])
        self.assertEqual(run_command('lens', 'reverse', 'L(49,18)'), ['L(49,31)'])
        self.assertEqual(run_command('lens', 'inverse', '18', '49'), ['30'])

        data = json.loads(run_command('lens', 'homotopy', 'L(49,32)', 'L(49,20)', '--json')[0])
        self.assertEqual(data['witness'], {'n': 12, 'sign': -1})

    def test_braid(self):
        self.assertEqual(run_command('braid', 'permutation', 'W3^-1', 'W7^3'), ['(1 6 2 4 7 3 5)'])
        self.assertEqual(run_command('braid', 'knot', 'W3^-1', 'W7^3'), ['true'])
        self.assertEqual(run_command('braid', 'winding', 'W3^-1', 'W7^3'), ['7'])
        self.assertEqual(run_command('braid', 'permutation', 'W2', '--strands', '3'), ['(1 2)(3)'])

    def test_family(self):
        lines = run_command('family', 'type-iv', '--k', '1..1')
        self.assertEqual(len(lines), 1)
        self.assertIn('L(8,5)', lines[0])
        self.assertIn('L(2,1)', lines[0])

        records = [json.loads(line) for line in run_command('family', 'type-iv', '--k', '1..3', '--json')]
        self.assertEqual([record['k'] for record in records], [1, 2, 3])
        self.assertEqual(records[1]['pair_plus'], ['L(18,7)', 'L(18,11)'])
        self.assertTrue(all(record['family_is_non_example'] for record in records))

        self.assertEqual(command_error('family', 'type-iv', '--k', '0..2').returncode, 1)

    def test_search(self):
        lines = run_command('search', 'meridians', '--max-p', '1', '--max-den', '3', '--json')
        self.assertTrue(lines)
        for line in lines:
            self.assertEqual(json.loads(line)['dist'], 1)
        self.assertEqual(lines, run_command('search', 'meridians', '--max-p', '1', '--max-den', '3', '--json'))

        lines = run_command('search', 'type-iv', '--k-max', '2', '--json')
        self.assertEqual(len(lines), 4)
        self.assertTrue(json.loads(lines[0])['family_is_non_example'])

        self.assertIn('2 9', run_command('search', 'swaps', '--p', '17'))

    def test_verify(self):
        lines = run_command('verify', 'paper-example')
        text = '\n'.join(lines)
        self.assertIn('distance=49', text)
        self.assertIn('pair=reflective', text)
        self.assertIn('witness 30*31=-1 mod 49', text)
        self.assertNotIn('FAIL', text)

        self.assertTrue(run_command('verify', 'type-iv', '--k-max', '50'))
        self.assertTrue(run_command('verify', 'heegaard-swap', '--max-p', '50', '--json'))

    def test_verify_bounds(self):
        self.assertEqual(command_error('verify', 'type-iv', '--k-max', '0').returncode, 1)
        self.assertEqual(command_error('verify', 'type-iv', '--k-max', '-5').returncode, 1)
        self.assertEqual(command_error('verify', 'heegaard-swap', '--max-p', '1').returncode, 1)
        self.assertIn('k=1..1', '\n'.join(run_command('verify', 'type-iv', '--k-max', '1')))

    @skipUnless(HAS_DIGIT_LIMIT, 'no integer string limit on this interpreter')
    def test_long_integers(self):
        power = '1' + '0' * 2999
        with int_digit_limit(4300):
            self.assertEqual(command_error('slope', 'distance', LONG_INTEGER + '/1', '0/1').returncode, 2)
            # 10**5998 - 1 is too long to print
            self.assertEqual(command_error('slope', 'distance', power + '/1', '1/' + power).returncode, 3)

        with int_digit_limit(4300):
            out = StringIO()
            with redirect_stdout(out):
                self.assertEqual(main(['slope', 'distance', LONG_INTEGER + '/1', '0/1']), 0)
            self.assertEqual(out.getvalue().strip(), LONG_INTEGER)

    def test_console_script(self):
        out = StringIO()
        with redirect_stdout(out):
            self.assertEqual(main(['slope', 'distance', '18/49', '19/49']), 0)
        self.assertEqual(out.getvalue().strip(), '49')


# Helpers ####################################################################

def random_slope(rng, bound=10 ** 6):
    """Returns a random slope with numerator and denominator in
    ``[-bound, bound]``.
    """
    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if math.gcd(a, b) == 1:
            return Slope(a, b)


def random_map(rng):
    """Returns a random product of elementary unimodular maps, of either
    determinant.
    """
    generators = (UnimodularMap(0, -1, 1, 0), UnimodularMap(1, 0, 0, -1))
    m = IDENTITY
    for _ in range(rng.randint(1, 6)):
        k = rng.randint(-3, 3)
        m = m @ UnimodularMap(1, k, 0, 1) @ rng.choice(generators)
    return m


def random_word(rng, strands):
    tokens = []
    for _ in range(rng.randint(0, 6)):
        tokens.append((rng.randint(2, strands), rng.choice((-3, -2, -1, 1, 2, 3))))
    return BraidWord(strands, tuple(tokens))


def all_lens_spaces(max_p):
    spaces = [LensSpace(0, 1), LensSpace(1, 0)]
    for p in range(2, max_p + 1):
        spaces.extend(LensSpace(p, q) for q in units(p))
    return spaces


def assert_equivalence_relation(test, relation, spaces):
    """Checks that ``relation`` is an equivalence relation on each set of
    lens spaces of equal order.
    """
    by_order = {}
    for lens in spaces:
        by_order.setdefault(lens.p, []).append(lens)
    for group in by_order.values():
        related = {lens: frozenset(other for other in group if relation(lens, other)) for lens in group}
        for lens, others in related.items():
            test.assertIn(lens, others)
            for other in others:
                test.assertEqual(related[other], others)


def run_command(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().splitlines()


def command_error(*args):
    try:
        run_command(*args)
    except CommandError as e:
        return e
    raise AssertionError("%s did not fail" % " ".join(args))


@contextmanager
def int_digit_limit(limit):
    """Applies the interpreter's integer string limit for the block and
    restores the previous one.
    """
    previous = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(limit)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(previous)
