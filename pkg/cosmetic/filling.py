"""Dehn fillings of ``T2 x [0, 1]`` and meridians of surgered knots in solid
tori.
"""
import logging
import math

# cosmetic imports
from cosmetic.exceptions import CosmeticError, WindingNumberError
from cosmetic.lens import make_lens
from cosmetic.slopes import Slope, complete_to_unimodular, make_slope

logger = logging.getLogger(__name__)

UNKNOT_MERIDIAN = Slope(0, 1)


def fill_two_sided(r1, r2, completion=None):
    """Returns the lens space obtained by filling the two boundary tori of
    ``T2 x [0, 1]`` along ``r1 = a/b`` and ``r2 = c/d``.

    With ``a*b - b*a == 1`` this is ``L(bc - ad, a*d - b*c)``; the order of
    its first homology is the distance of the slopes. Equal slopes give
    S2xS1.

    **Parameters:**

    r1, r2
        The filling slopes.

    completion
        A determinant +1 matrix with second column ``(a, b)``. Defaults to
        :func:`cosmetic.slopes.complete_to_unimodular`; any other valid
        choice gives the same lens space.
    """
    if completion is None:
        completion = complete_to_unimodular(r1)
    elif completion.det != 1 or completion.columns[1] != (r1.a, r1.b):
        raise CosmeticError('%s is not a determinant 1 completion of %s' % (completion, r1))

    a, b = r1.a, r1.b
    c, d = r2.a, r2.b
    a_star, b_star = completion.columns[0]
    return make_lens(b * c - a * d, a_star * d - b_star * c)


def lens_from_construction(meridian, outer):
    """Returns the lens space obtained by attaching a solid torus along
    ``outer`` to the outside of a solid torus with meridian ``meridian``.
    """
    return fill_two_sided(meridian, outer)


def surgery_lens(r):
    """Returns the result of ``r``-surgery on the unknot in S3.
    """
    return fill_two_sided(UNKNOT_MERIDIAN, r)


def _check_winding(winding):
    if isinstance(winding, bool) or not isinstance(winding, int) or winding < 1:
        raise WindingNumberError('winding number must be a positive integer, got %r' % (winding,))


def gordon_reduction(surgery, winding):
    """Returns ``gcd(p, k**2 * q)`` for the surgery slope ``p/q`` and the
    winding number ``k``. It exceeds 1 only if ``gcd(p, k) > 1``.
    """
    _check_winding(winding)
    return math.gcd(surgery.a, winding * winding * surgery.b)


def gordon_meridian(surgery, winding):
    """Returns the meridian ``p/(k**2 q)`` of the solid torus obtained by
    ``p/q``-surgery on a knot of winding number ``k`` in a solid torus,
    reduced. A reduction factor above 1 is logged as a warning; use
    :func:`reduced_meridian` to read it.

    **Parameters:**

    surgery
        The surgery slope ``p/q``.

    winding
        The winding number ``k``, a positive integer.
    """
    slope, factor = reduced_meridian(surgery, winding)
    if factor > 1:
        logger.warning('meridian of %s at winding %d reduced by %d' % (surgery, winding, factor))
    return slope


def reduced_meridian(surgery, winding):
    """Returns ``(meridian, factor)``: the reduced meridian of
    :func:`gordon_meridian` together with the common factor divided out of
    ``p/(k**2 q)``.
    """
    factor = gordon_reduction(surgery, winding)
    return make_slope(surgery.a, winding * winding * surgery.b, reduce=True), factor
