"""Exact arithmetic on slopes of a boundary torus.

A slope is the class of a coprime integer pair ``(a, b)`` up to global sign,
written ``a/b``. Every :class:`Slope` is kept in canonical form: ``b > 0``,
or ``b == 0`` and ``a == 1`` (the meridian ``1/0``).
"""
import math
import re
from dataclasses import dataclass

# cosmetic imports
from cosmetic.conf import settings
from cosmetic.exceptions import (DegenerateSlopeError, EqualSlopesError, LiteralError, NotCoprimeError,
                                 NotUnimodularError)
from cosmetic.utils import parse_int, xgcd

SLOPE_RE = re.compile(r'^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$')


@dataclass(frozen=True, order=True)
class Slope:
    """An unoriented slope ``a/b`` in canonical form.

    **Attributes:**

    a
        The numerator.

    b
        The denominator; never negative, and zero only for ``1/0``.
    """
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if a == 0 and b == 0:
            raise DegenerateSlopeError('0/0 is not a slope')
        if math.gcd(a, b) != 1:
            raise NotCoprimeError('%d/%d is not reduced' % (a, b))
        if b < 0 or (b == 0 and a < 0):
            object.__setattr__(self, 'a', -a)
            object.__setattr__(self, 'b', -b)

    def __str__(self):
        return '%d/%d' % (self.a, self.b)

    def __iter__(self):
        return iter((self.a, self.b))


MERIDIAN = Slope(1, 0)


def make_slope(a, b, reduce=False):
    """Returns the slope of the pair ``(a, b)``.

    **Parameters:**

    a, b
        Any integers except ``(0, 0)``.

    reduce
        If True a non-coprime pair is divided by its gcd, otherwise it is
        rejected with :class:`NotCoprimeError`.
    """
    if a == 0 and b == 0:
        raise DegenerateSlopeError('0/0 is not a slope')
    g = math.gcd(a, b)
    if g != 1:
        if not reduce:
            raise NotCoprimeError('%d/%d is not reduced (gcd %d)' % (a, b, g))
        a, b = a // g, b // g
    return Slope(a, b)


def parse_slope(text, reduce=None):
    """Parses a slope literal like ``18/49``, ``-1/0`` or ``19/1``.

    **Parameters:**

    text
        The literal: optional sign, digits, ``/``, optional sign, digits.

    reduce
        Whether ``2/4`` is accepted as ``1/2``. Defaults to the
        ``COSMETIC_REDUCE_SLOPES`` setting.
    """
    if reduce is None:
        reduce = settings.COSMETIC_REDUCE_SLOPES

    match = SLOPE_RE.match(text)
    if match is None:
        raise LiteralError('malformed slope %r, expected a/b' % text)
    return make_slope(parse_int(match.group(1), text), parse_int(match.group(2), text), reduce=reduce)


def distance(r1, r2):
    """Returns the distance (minimal geometric intersection number) of two
    slopes, ``|a1*b2 - b1*a2|``. It is zero exactly when the slopes are
    equal.
    """
    return abs(r1.a * r2.b - r1.b * r2.a)


def negate(r):
    """Returns ``-r``, the class of ``(-a, b)``.
    """
    return Slope(-r.a, r.b)


def equidistant_slopes(r1, r2):
    """Returns the two slopes which have the same distance from ``r1`` and
    from ``r2``: the difference slope ``(a1-a2)/(b1-b2)`` first and the sum
    slope ``(a1+a2)/(b1+b2)`` second, both reduced.

    The canonical representatives of ``r1`` and ``r2`` are used, so the
    order of the pair is deterministic. Raises :class:`EqualSlopesError` if
    ``r1 == r2``, since then every slope is equidistant.
    """
    if r1 == r2:
        raise EqualSlopesError('%s and %s are the same slope' % (r1, r2))
    difference = make_slope(r1.a - r2.a, r1.b - r2.b, reduce=True)
    total = make_slope(r1.a + r2.a, r1.b + r2.b, reduce=True)
    return difference, total


@dataclass(frozen=True)
class UnimodularMap:
    """A 2x2 integer matrix ``[[m11, m12], [m21, m22]]`` of determinant +1
    or -1, acting on slopes as a linear automorphism of the torus.
    """
    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise NotUnimodularError('determinant of %s is %d' % (self, self.det))

    def __str__(self):
        return '[[%d, %d], [%d, %d]]' % (self.m11, self.m12, self.m21, self.m22)

    def __matmul__(self, other):
        return UnimodularMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    @property
    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def columns(self):
        return (self.m11, self.m21), (self.m12, self.m22)

    def inverse(self):
        d = self.det
        return UnimodularMap(d * self.m22, -d * self.m12, -d * self.m21, d * self.m11)

    def apply(self, r):
        return apply_map(self, r)


IDENTITY = UnimodularMap(1, 0, 0, 1)


def apply_map(m, r):
    """Returns the image of the slope ``r`` under the unimodular map ``m``.
    Unimodularity keeps the image pair coprime.
    """
    return Slope(m.m11 * r.a + m.m12 * r.b, m.m21 * r.a + m.m22 * r.b)


def complete_to_unimodular(r):
    """Returns the determinant +1 matrix with columns ``(a*, b*)`` and
    ``(a, b)``, where ``a*b - b*a == 1``, computed with the extended
    Euclidean algorithm.

    Of all solutions ``(a* + k*a, b* + k*b)`` the one with the smallest
    non-negative ``b*`` is returned. For the meridian ``1/0`` the solutions
    all have ``b* == -1`` and ``a* == 0`` is used.

    **Parameters:**

    r
        The slope whose canonical representative ``(a, b)`` becomes the
        second column.
    """
    a, b = r.a, r.b
    _, x, y = xgcd(a, b)
    a_star, b_star = y, -x
    if b > 0:
        shift = b_star // b
        a_star -= shift * a
        b_star -= shift * b
    return UnimodularMap(a_star, a, b_star, b)


def completion_inverse(r):
    """Returns the inverse of :func:`complete_to_unimodular`, the matrix
    with rows ``(b, -a)`` and ``(-b*, a*)``. It takes ``r`` to ``0/1``.
    """
    return complete_to_unimodular(r).inverse()
