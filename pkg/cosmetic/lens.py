"""Oriented lens spaces ``L(p, q)`` and their classification arithmetic.

``L(0, 1)`` is S2xS1 and ``L(1, 0)`` is S3. For ``p >= 2`` the residue ``q``
is kept in ``(0, p)``; reversing the orientation maps ``q`` to ``p - q``.
"""
import math
import re
from dataclasses import dataclass

# cosmetic imports
from cosmetic.exceptions import CosmeticError, LiteralError, NotAUnitError, NotCoprimeError
from cosmetic.utils import parse_int, squares, xgcd

LENS_RE = re.compile(r'^\s*L\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*$')


@dataclass(frozen=True, order=True)
class LensSpace:
    """An oriented lens space in canonical form.

    **Attributes:**

    p
        The order of the first homology group; 0 for S2xS1.

    q
        The residue carrying the orientation: 1 if ``p == 0``, 0 if
        ``p == 1``, otherwise a unit in ``(0, p)``.
    """
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0:
            raise CosmeticError('L(%d,%d) is not canonical, p must not be negative' % (p, q))
        if p == 0 and q != 1 or p == 1 and q != 0:
            raise CosmeticError('L(%d,%d) is not canonical' % (p, q))
        if p >= 2:
            if not 0 < q < p:
                raise CosmeticError('L(%d,%d) is not canonical, q must lie in (0, p)' % (p, q))
            if math.gcd(p, q) != 1:
                raise NotCoprimeError('L(%d,%d): p and q are not coprime' % (p, q))

    def __str__(self):
        return 'L(%d,%d)' % (self.p, self.q)

    @property
    def name(self):
        if self.p == 0:
            return 'S2xS1'
        if self.p == 1:
            return 'S3'
        if self.p == 2:
            return 'RP3'
        return str(self)


def make_lens(P, Q):
    """Returns the canonical lens space of the coprime pair ``(P, Q)``.
    ``(-P, -Q)`` gives the same oriented space and ``Q`` is reduced mod
    ``P``.
    """
    if math.gcd(P, Q) != 1:
        raise NotCoprimeError('L(%d,%d): p and q are not coprime' % (P, Q))
    if P < 0:
        P, Q = -P, -Q
    if P == 0:
        return LensSpace(0, 1)
    return LensSpace(P, Q % P)


def parse_lens(text):
    """Parses a lens literal like ``L(49,-18)`` into its canonical form.
    """
    match = LENS_RE.match(text)
    if match is None:
        raise LiteralError('malformed lens space %r, expected L(p,q)' % text)
    return make_lens(parse_int(match.group(1), text), parse_int(match.group(2), text))


def reverse(lens):
    """Returns the lens space with the opposite orientation.
    """
    if lens.p <= 1:
        return lens
    return LensSpace(lens.p, (lens.p - lens.q) % lens.p)


def mod_inverse(q, p):
    """Returns the residue ``x`` in ``[0, p)`` with ``q*x == 1 mod p``.

    **Parameters:**

    q
        A residue coprime to ``p``.

    p
        The modulus, at least 1.
    """
    if p < 1:
        raise NotAUnitError('modulus %d is smaller than 1' % p)
    g, x, _ = xgcd(q, p)
    if g != 1:
        raise NotAUnitError('%d is not a unit mod %d' % (q, p))
    return x % p


def is_oriented_homeo(first, second):
    """Returns True if there is an orientation preserving homeomorphism
    between the lens spaces, i.e. ``q2 == q1`` or ``q1*q2 == 1 mod p``.
    """
    if first.p != second.p:
        return False
    p = first.p
    if p <= 1:
        return True
    return first.q == second.q or first.q * second.q % p == 1


def is_homeo(first, second):
    """Returns True if the lens spaces are homeomorphic, ignoring
    orientation: ``q2`` is one of ``q1``, ``-q1``, ``1/q1`` and ``-1/q1``
    mod ``p``.
    """
    if first.p != second.p:
        return False
    p = first.p
    if p <= 1:
        return True
    inverse = mod_inverse(first.q, p)
    return second.q in (first.q, -first.q % p, inverse, -inverse % p)


def is_amphicheiral(lens):
    """Returns True if the lens space admits an orientation reversing
    self-homeomorphism (``q**2 == -1 mod p``, or ``p <= 2``).
    """
    return is_oriented_homeo(lens, reverse(lens))


def homotopy_witness(first, second, oriented=False):
    """Returns ``(n, sign)`` with ``q1*q2 == sign * n**2 mod p`` if the lens
    spaces are homotopy equivalent, otherwise None. Squares are enumerated
    over ``n = 0 .. p-1``; the ``+`` sign is tried first.

    **Parameters:**

    first, second
        The lens spaces.

    oriented
        If True only ``sign == 1`` (orientation preserving homotopy
        equivalence) is accepted.
    """
    if first.p != second.p:
        return None
    p = first.p
    if p <= 1:
        return 1, 1
    product = first.q * second.q % p
    signs = (1,) if oriented else (1, -1)
    for sign in signs:
        for n in range(p):
            if sign * n * n % p == product:
                return n, sign
    return None


def is_homotopy_equivalent(first, second, oriented=False):
    """Returns True if ``q1*q2 == +-n**2 mod p`` for some ``n`` (only ``+``
    when ``oriented`` is True).
    """
    if first.p != second.p:
        return False
    p = first.p
    if p <= 1:
        return True
    product = first.q * second.q % p
    residues = squares(p)
    return product in residues or not oriented and -product % p in residues
