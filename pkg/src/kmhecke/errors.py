"""Exception types shared across the package."""


class KMHeckeError(Exception):
    """Base class for all library errors."""


class MathDomainError(KMHeckeError):
    """An input lies outside the domain of a mathematical operation."""


class InvalidMatrix(MathDomainError, ValueError):
    """A table of integers violates a generalized Cartan matrix axiom."""

    def __init__(self, message: str, i: int, j: int):
        super().__init__(message)
        self.i = i
        self.j = j


class DiagonalNotTwo(InvalidMatrix):
    pass


class PositiveOffDiagonal(InvalidMatrix):
    pass


class AsymmetricZero(InvalidMatrix):
    pass


class InvalidDatum(MathDomainError, ValueError):
    """Roots, coroots or the height functional are inconsistent with the matrix."""


class MixedN(MathDomainError):
    """Laurent polynomials in t = q^(1/N) with different N were combined."""


class NotAUnit(MathDomainError):
    """Inversion of a Laurent polynomial that is not of the form +-t^k."""


class NonIntegralExponent(MathDomainError):
    """N * ht(lambda) is not an integer."""


class NotDominant(MathDomainError):
    pass


class NotInTitsCone(MathDomainError):
    pass


class TitsConeUnknown(MathDomainError):
    """Tits-cone membership could not be decided within the step budget."""


class ZeroElement(MathDomainError):
    pass


class NotComparable(MathDomainError):
    """Two coweights do not differ by an element of the coroot lattice."""


class LengthCapExceeded(KMHeckeError):
    """A Weyl group element is longer than the configured word cap."""

    def __init__(self, length: int, cap: int):
        super().__init__(f"length {length} exceeds word cap {cap}")
        self.length = length
        self.cap = cap


class SizeBudgetExceeded(KMHeckeError):
    """An intermediate product outgrew the caller's size budget."""

    def __init__(self, size: int, budget: int):
        super().__init__(f"intermediate size {size} exceeds the budget of {budget}")
        self.size = size
        self.budget = budget
