class CosmeticError(ValueError):
    """Base class of all domain errors raised by cosmetic.
    """


class LiteralError(CosmeticError):
    """A slope, lens, braid or range literal could not be parsed.
    """


class DegenerateSlopeError(CosmeticError):
    """The pair (0, 0) does not describe a slope.
    """


class NotCoprimeError(CosmeticError):
    """A pair of integers which should be coprime is not.
    """


class EqualSlopesError(CosmeticError):
    """Two slopes which should be distinct are the same class.
    """


class NotAUnitError(CosmeticError):
    """A residue has no inverse for the given modulus.
    """


class NotUnimodularError(CosmeticError):
    """A matrix has a determinant other than +1 or -1.
    """


class WindingNumberError(CosmeticError):
    """A winding number is not a positive integer.
    """


class FamilyIndexError(CosmeticError):
    """A family index is not a positive integer.
    """


class BraidError(CosmeticError):
    """A braid token does not fit the strand count.
    """
