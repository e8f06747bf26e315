"""Braid words in solid tori, written in the tokens ``W_n^e`` where ``W_n``
is the product of the first ``n - 1`` standard braid generators, and the
Type-IV Pythagorean family.
"""
import re
from dataclasses import dataclass

# cosmetic imports
from cosmetic.exceptions import BraidError, FamilyIndexError, LiteralError
from cosmetic.lens import make_lens, reverse
from cosmetic.slopes import MERIDIAN, Slope
from cosmetic.utils import parse_int

TOKEN_RE = re.compile(r'^W_?\{?(\d+)\}?(?:\^\{?([+-]?\d+)\}?)?$')


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands given as a sequence of ``(n, e)``
    tokens, each meaning ``W_n^e``.

    ``W_n`` is read as the generator product ``s_{n-1} ... s_1``, so that
    its strand permutation is the cycle ``(1 2 ... n)`` when tokens act from
    left to right.
    """
    strands: int
    tokens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'tokens', tuple(tuple(token) for token in self.tokens))
        if self.strands < 1:
            raise BraidError('a braid needs at least one strand, got %d' % self.strands)
        for n, e in self.tokens:
            if not 2 <= n <= self.strands:
                raise BraidError('W%d does not fit on %d strands' % (n, self.strands))
            if e == 0:
                raise BraidError('W%d has exponent 0' % n)

    def __str__(self):
        return ' '.join('W%d^%d' % token for token in self.tokens)

    def __add__(self, other):
        return concatenate(self, other)


def concatenate(first, second):
    """Returns the word ``first`` followed by ``second`` on the larger strand
    count of the two.
    """
    return BraidWord(max(first.strands, second.strands), first.tokens + second.tokens)


def parse_braid(text, strands=None):
    """Parses a word like ``W3^-1 W7^3``. The exponent ``^1`` may be
    omitted.

    **Parameters:**

    text
        Whitespace separated tokens.

    strands
        The strand count. Defaults to the largest token index.
    """
    tokens = []
    for part in text.split():
        match = TOKEN_RE.match(part)
        if match is None:
            raise LiteralError('malformed braid token %r, expected Wn^e' % part)
        exponent = match.group(2)
        tokens.append((parse_int(match.group(1), part), parse_int(exponent, part) if exponent is not None else 1))

    if strands is None:
        if not tokens:
            raise LiteralError('cannot infer the strand count of an empty word')
        strands = max(n for n, _ in tokens)
    return BraidWord(strands, tuple(tokens))


def permutation_of(word):
    """Returns the permutation of ``1..N`` induced by the word, as the tuple
    of images of ``1, 2, ..., N``. ``W_n`` maps to the cycle ``(1 2 ... n)``
    and tokens act from left to right.
    """
    images = list(range(1, word.strands + 1))
    for n, e in word.tokens:
        images = [(i - 1 + e) % n + 1 if i <= n else i for i in images]
    return tuple(images)


def sigma_word(word):
    """Returns the word in the standard generators as signed indices, ``i``
    for ``s_i`` and ``-i`` for its inverse.
    """
    letters = []
    for n, e in word.tokens:
        if e > 0:
            letters.extend(list(range(n - 1, 0, -1)) * e)
        else:
            letters.extend(list(range(-1, -n, -1)) * -e)
    return tuple(letters)


def permutation_of_letters(strands, letters):
    """Returns the strand permutation of a word in the standard generators,
    letters acting from left to right, each ``s_i`` swapping positions ``i``
    and ``i + 1``.
    """
    images = list(range(1, strands + 1))
    for letter in letters:
        i = abs(letter)
        images = [i + 1 if x == i else i if x == i + 1 else x for x in images]
    return tuple(images)


def reverse_orientation(word):
    """Returns the generator word of the braid read backwards; its closure is
    the closure of ``word`` with the opposite orientation.
    """
    return tuple(reversed(sigma_word(word)))


def compose(first, second):
    """Returns the permutation applying ``first`` and then ``second``.
    """
    return tuple(second[i - 1] for i in first)


def cycles(permutation):
    """Returns the cycles of a permutation, each starting at its smallest
    element, ordered by that element. Fixed points are 1-cycles.
    """
    seen = set()
    result = []
    for start in range(1, len(permutation) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = permutation[start - 1]
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = permutation[current - 1]
        result.append(tuple(cycle))
    return result


def cycle_type(permutation):
    """Returns the cycle lengths of a permutation in decreasing order.
    """
    return tuple(sorted((len(cycle) for cycle in cycles(permutation)), reverse=True))


def is_knot(word):
    """Returns True if the closure of the word in the solid torus is a knot,
    i.e. its permutation is a single cycle through all strands.
    """
    return len(cycles(permutation_of(word))) == 1


def winding_number(word):
    """Returns the winding number of the closed braid in the solid torus,
    which is its strand count.
    """
    return word.strands


@dataclass(frozen=True)
class FamilyRecord:
    """One member of the Type-IV family.

    **Attributes:**

    k
        The family index.

    s, t, u
        The Pythagorean triple ``(2k+1, 2k(k+1), 2k^2+2k+1)``.

    word
        ``W_s^1 W_t^-s`` on ``t`` strands.

    pair_plus, pair_minus
        ``L(u+s, s+2)`` and ``L(u-s, s-2)``, each with its reverse.

    family_is_non_example
        Always True: the filled manifolds are graph manifolds and the
        slopes are equivalent, so these pairs are not exotic.
    """
    k: int
    s: int
    t: int
    u: int
    word: BraidWord
    pair_plus: tuple
    pair_minus: tuple
    family_is_non_example: bool = True


def type_iv_family(k):
    """Returns the :class:`FamilyRecord` of index ``k >= 1``.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise FamilyIndexError('family index must be a positive integer, got %r' % (k,))
    s = 2 * k + 1
    t = 2 * k * (k + 1)
    u = 2 * k * k + 2 * k + 1
    plus = make_lens(u + s, s + 2)
    minus = make_lens(u - s, s - 2)
    return FamilyRecord(
        k=k, s=s, t=t, u=u,
        word=BraidWord(t, ((s, 1), (t, -s))),
        pair_plus=(plus, reverse(plus)),
        pair_minus=(minus, reverse(minus)),
    )


@dataclass(frozen=True)
class ConstructionRecord:
    """The 1-bridge braid with three solid torus filling slopes.

    The special slopes and the two boolean flags are data taken from the
    literature, not computed here.
    """
    word: BraidWord
    special_slopes: tuple
    winding: int
    hyperbolic_exterior: bool = True
    slopes_inequivalent: bool = True

    @property
    def surgery_slopes(self):
        return tuple(slope for slope in self.special_slopes if slope != MERIDIAN)


def paper_example():
    """Returns the :class:`ConstructionRecord` of ``W3^-1 W7^3`` on 7
    strands, with special slopes ``1/0``, ``18/1`` and ``19/1``.
    """
    word = BraidWord(7, ((3, -1), (7, 3)))
    return ConstructionRecord(
        word=word,
        special_slopes=(MERIDIAN, Slope(18, 1), Slope(19, 1)),
        winding=winding_number(word),
    )
