# Integer helpers shared by the slope, lens space and search modules. Python
# integers are unbounded, so nothing here can wrap around.
import math

# cosmetic imports
from cosmetic.exceptions import LiteralError


def xgcd(a, b):
    """Returns ``(g, x, y)`` with ``a*x + b*y == g`` and ``g`` the
    non-negative gcd of ``a`` and ``b`` (extended Euclidean algorithm).

    **Parameters:**

    a, b
        Any integers.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_x, x = x, old_x - quotient * x
        old_y, y = y, old_y - quotient * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def is_coprime(a, b):
    """Returns True if ``gcd(a, b) == 1``. Note that ``gcd(0, n) == |n|``.
    """
    return math.gcd(a, b) == 1


def units(p):
    """Returns the residues in ``[0, p)`` which are invertible mod ``p``, in
    increasing order. For ``p == 1`` this is ``[0]``.
    """
    if p == 1:
        return [0]
    return [q for q in range(1, p) if math.gcd(q, p) == 1]


def squares(p):
    """Returns the set of squares mod ``p``, enumerated exhaustively over
    ``n = 0 .. p-1``.
    """
    return {n * n % p for n in range(p)}


def parse_int(text, literal):
    """Converts one integer field of ``literal``. Fields too long for the
    interpreter's integer string limit are reported as malformed.
    """
    try:
        return int(text)
    except ValueError as e:
        raise LiteralError('cannot read %d digit integer in %.40r: %s' % (len(text), literal, e))


def parse_range(text):
    """Parses an inclusive integer range literal ``A..B`` (or a single
    ``A``) and returns ``(A, B)``.
    """
    head, sep, tail = text.strip().partition('..')
    try:
        start = int(head)
        stop = int(tail) if sep else start
    except ValueError:
        raise LiteralError('malformed range %r, expected A..B' % text)
    if start > stop:
        raise LiteralError('empty range %r' % text)
    return start, stop
