"""Self-checks reproducing the L(49,18) construction, the homotopy
equivalent pair of its second outer slope, the trefoil distances, the
Type-IV family and the Heegaard-swap partition.

Every function returns a list of :class:`Check`; a target passes when all of
its checks pass.
"""
import logging
import math
from collections import namedtuple

# cosmetic imports
from cosmetic.braids import cycles, is_knot, paper_example, permutation_of, type_iv_family
from cosmetic.exceptions import CosmeticError
from cosmetic.filling import gordon_meridian, lens_from_construction
from cosmetic.lens import LensSpace, homotopy_witness, is_homeo, is_oriented_homeo, make_lens, reverse
from cosmetic.search import Classification, classify_pair, heegaard_swap_pairs, self_inverse_units
from cosmetic.slopes import MERIDIAN, Slope, distance, equidistant_slopes
from cosmetic.utils import units

logger = logging.getLogger(__name__)

Check = namedtuple('Check', ['name', 'passed', 'detail'])

WINDING = 7
TARGET = LensSpace(49, 18)


def _check_bound(name, value, least):
    if isinstance(value, bool) or not isinstance(value, int) or value < least:
        raise CosmeticError('%s must be an integer >= %d, got %r' % (name, least, value))


def _special_meridians():
    record = paper_example()
    return [gordon_meridian(slope, record.winding) for slope in record.surgery_slopes]


def verify_paper_example():
    """Runs the construction from the braid ``W3^-1 W7^3`` to the
    oppositely oriented copies of ``L(49,18)``.
    """
    record = paper_example()
    checks = []

    checks.append(Check('winding=%d' % record.winding, record.winding == WINDING, str(record.word)))
    checks.append(Check('braid closes to a knot', is_knot(record.word),
                        'cycles %s' % cycles(permutation_of(record.word))))

    a, b, c = record.special_slopes
    distances = (distance(a, b), distance(a, c), distance(b, c))
    checks.append(Check('special slopes %s %s %s distances=%s' % (a, b, c, ','.join(map(str, distances))),
                        distances == (1, 1, 1), 'pairwise adjacent'))

    expected = {Slope(18, 1): Slope(18, 49), Slope(19, 1): Slope(19, 49), MERIDIAN: MERIDIAN}
    for surgery, meridian in expected.items():
        found = gordon_meridian(surgery, record.winding)
        checks.append(Check('meridian %s k=%d -> %s' % (surgery, record.winding, found), found == meridian,
                            'expected %s' % meridian))

    r1, r2 = _special_meridians()
    checks.append(Check('distance=%d' % distance(r1, r2), distance(r1, r2) == 49, '%s %s' % (r1, r2)))

    outers = equidistant_slopes(r1, r2)
    checks.append(Check('equidistant=%s,%s' % outers, outers == (MERIDIAN, Slope(37, 98)), ''))

    fills = (lens_from_construction(r1, MERIDIAN), lens_from_construction(r2, MERIDIAN))
    checks.append(Check('fills outer=1/0: %s %s' % fills,
                        all(lens.p == 49 == distance(r, MERIDIAN) for lens, r in zip(fills, (r1, r2))),
                        'both of order 49'))

    classification = classify_pair(*fills)
    checks.append(Check('pair=reflective', classification == Classification.REFLECTIVELY,
                        'classified %s' % classification))
    checks.append(Check('not orientation preservingly homeomorphic', not is_oriented_homeo(*fills), ''))
    checks.append(Check('each fill ~ %s' % TARGET, all(is_homeo(lens, TARGET) for lens in fills),
                        'unoriented'))

    q1, q2 = fills[0].q, fills[1].q
    checks.append(Check('witness %d*%d=-1 mod %d' % (q1, q2, fills[0].p), (q1 * q2 + 1) % fills[0].p == 0,
                        '%d*%d=%d' % (q1, q2, q1 * q2)))
    checks.append(Check('witness (-18)*(-19)=342=7*49-1', (-18) * (-19) == 7 * 49 - 1, ''))

    checks.append(Check('imported: hyperbolic exterior, inequivalent slopes',
                        record.hyperbolic_exterior and record.slopes_inequivalent, 'not computed'))
    return checks


def verify_homotopy_remark():
    """Checks that the outer slope ``37/98`` gives non-homeomorphic but
    homotopy equivalent lens spaces.
    """
    r1, r2 = _special_meridians()
    outer = equidistant_slopes(r1, r2)[1]
    fills = (lens_from_construction(r1, outer), lens_from_construction(r2, outer))
    checks = [
        Check('fills outer=%s: %s %s' % ((outer,) + fills), all(lens.p == 49 for lens in fills), ''),
        Check('not homeomorphic', not is_homeo(*fills), 'unoriented'),
    ]

    witness = homotopy_witness(*fills)
    detail = 'none' if witness is None else '%d*%d=%+d*%d^2 mod 49' % (fills[0].q, fills[1].q, witness[1],
                                                                       witness[0])
    checks.append(Check('homotopy equivalent', witness is not None, detail))

    oriented = [homotopy_witness(fills[0], second, oriented=True) for second in (fills[1], reverse(fills[1]))]
    checks.append(Check('orientation preserving homotopy equivalent up to global orientation',
                        any(witness is not None for witness in oriented), str(oriented)))
    return checks


def verify_mathieu():
    """Checks that ``9/1`` and ``9/2`` have different distances from the
    meridian.
    """
    d1 = distance(Slope(9, 1), MERIDIAN)
    d2 = distance(Slope(9, 2), MERIDIAN)
    return [Check('distance(9/1,1/0)=%d distance(9/2,1/0)=%d' % (d1, d2), (d1, d2) == (1, 2), '')]


def verify_type_iv(k_max):
    """Checks the Pythagorean identities and the lens spaces of the Type-IV
    family for ``k = 1 .. k_max``.
    """
    _check_bound('k_max', k_max, 1)
    failures = {'pythagorean': [], 'sums': [], 'parity': [], 'plus': [], 'minus': [], 'opposite': []}
    for k in range(1, k_max + 1):
        record = type_iv_family(k)
        s, t, u = record.s, record.t, record.u
        if s * s + t * t != u * u:
            failures['pythagorean'].append(k)
        if u + s != 2 * (k + 1) ** 2 or u - s != 2 * k * k:
            failures['sums'].append(k)
        if s % 2 != 1 or t % 2 != 0 or math.gcd(s, t) != 1:
            failures['parity'].append(k)
        if record.pair_plus[0] != make_lens(2 * (k + 1) ** 2, 2 * k + 3):
            failures['plus'].append(k)
        if record.pair_minus[0] != make_lens(2 * k * k, 2 * k - 1):
            failures['minus'].append(k)
        for first, second in (record.pair_plus, record.pair_minus):
            if not is_oriented_homeo(first, reverse(second)):
                failures['opposite'].append(k)

    names = {
        'pythagorean': 's^2+t^2=u^2',
        'sums': 'u+s=2(k+1)^2, u-s=2k^2',
        'parity': 's odd, t even, gcd(s,t)=1',
        'plus': 'pair L(2(k+1)^2,2k+3)',
        'minus': 'pair L(2k^2,2k-1)',
        'opposite': 'pairs oppositely oriented',
    }
    return [Check('%s for k=1..%d' % (names[key], k_max), not failed, 'first failure k=%s' % failed[:1])
            for key, failed in failures.items()]


def verify_heegaard_swap(max_p):
    """Checks the ``17/2``, ``17/9`` swap and that swap pairs together with
    the self-inverse units partition the units mod ``p`` for ``2 <= p <=
    max_p``.
    """
    _check_bound('max_p', max_p, 2)
    checks = [Check('swap pairs p=17 include {2,9}', (2, 9) in heegaard_swap_pairs(17), '')]
    failed = []
    for p in range(2, max_p + 1):
        covered = [q for pair in heegaard_swap_pairs(p) for q in pair] + self_inverse_units(p)
        if sorted(covered) != units(p):
            failed.append(p)
    checks.append(Check('swap pairs and self-inverse units partition the units for p=2..%d' % max_p, not failed,
                        'first failure p=%s' % failed[:1]))
    return checks


def run_target(name, k_max=None, max_p=None):
    """Runs one verification target by name and returns its checks.

    **Parameters:**

    name
        ``paper-example`` (with the homotopy remark and the trefoil
        distances), ``type-iv`` or ``heegaard-swap``.

    k_max, max_p
        Bounds of the ``type-iv`` and ``heegaard-swap`` targets.
    """
    if name == 'paper-example':
        checks = verify_paper_example() + verify_homotopy_remark() + verify_mathieu()
    elif name == 'type-iv':
        checks = verify_type_iv(k_max)
    elif name == 'heegaard-swap':
        checks = verify_heegaard_swap(max_p)
    else:
        raise ValueError('unknown verification target %r' % name)

    failed = [check for check in checks if not check.passed]
    logger.info('%s: %d of %d checks passed' % (name, len(checks) - len(failed), len(checks)))
    for check in failed:
        logger.debug('%s failed: %s' % (check.name, check.detail))
    return checks
