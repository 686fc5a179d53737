"""Exception types shared across the package."""


class QTorusError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(QTorusError):
    """Division or inversion of a zero scalar/element."""


class InvalidExponentSystem(QTorusError):
    """Exponent matrices fail the antisymmetry/zero-diagonal constraints.

    Carries the 1-based location (k, i, j) of the first offending entry.
    """

    def __init__(self, k: int, i: int, j: int, message: str | None = None):
        self.location = (k, i, j)
        super().__init__(message or f"exponent matrix violation at (k={k}, i={i}, j={j})")


class DimensionMismatch(QTorusError):
    """Vector length does not match the rank of the exponent lattice."""


class ContextMismatch(QTorusError):
    """Operands belong to different algebras."""


class SearchSpaceTooLarge(QTorusError):
    """Enumeration budget exceeded in a brute-force search."""


class NotInSubalgebra(QTorusError):
    """Element support is not contained in the required sublattice."""


class ZeroElement(QTorusError):
    """Operation undefined for the zero element."""


class NotUnitary(QTorusError):
    """Terminal coefficient of a skew-Laurent form is not a unit.

    ``coefficient`` holds a rendering of the offending terminal coefficient.
    """

    def __init__(self, which: str, coefficient: str):
        self.which = which
        self.coefficient = coefficient
        super().__init__(f"{which} coefficient {coefficient} is not a unit")


class NonUnitLeadingCoefficient(QTorusError):
    """Right division requires a unit leading coefficient (promotion disabled)."""


class NonCommutativeCoefficients(QTorusError):
    """Operation requires the coefficient subalgebra to be commutative."""


class ZeroCharacterValue(QTorusError):
    """Characters must take nonzero values on every generator."""


class WrongMode(QTorusError):
    """Operation requires the other field mode (generic vs root of unity)."""


class UnsupportedRank(QTorusError):
    """Certificate only available for corank-1 coefficient lattices of rank 1."""


class BudgetExceeded(QTorusError):
    """Work budget exceeded (growth filtration or certification schedule)."""
