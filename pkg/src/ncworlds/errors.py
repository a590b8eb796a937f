"""Exception types shared across the package."""


class NCWorldsError(Exception):
    """Base class for all package-specific errors."""


class UnknownGenerator(NCWorldsError):
    """An expression uses a generator with no declared relation behavior."""


class InconsistentRelations(NCWorldsError):
    """A relation set failed its critical-pair (local confluence) check."""


class DimensionMismatch(NCWorldsError):
    """Vector/tensor operands disagree on dimension."""


class IndexOutOfRange(NCWorldsError):
    """A 1-based component index lies outside 1..d."""


class NonCyclicTensor(NCWorldsError):
    """A structure-constant tensor violates cyclic invariance f_ijk = f_kij."""


class NonPolynomialHamiltonian(NCWorldsError):
    """A Hamiltonian contains the shift symbol or dotted/shifted generators."""


class WindowTooShort(NCWorldsError):
    """A time-series operation needs more samples than the valid window holds."""


class InvalidParameter(NCWorldsError):
    """A numeric parameter (seed, length, k, tau, dimension) is out of range."""


class ParseError(NCWorldsError):
    """The plain-text expression syntax could not be parsed."""
