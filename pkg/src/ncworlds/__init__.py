"""Exact non-commutative calculus with a discrete time-series backend.

The symbolic layer does exact arithmetic in free non-commutative algebras
and their shift/flat quotients: derivations as commutators, canonical normal
forms, epsilon-tensor vector calculus, Hamilton/Heisenberg/curvature checks,
and the generalized electromagnetic identities.  The discrete layer realizes
the same algebra numerically as J-powers acting on time series and validates
every identity pointwise on concrete data.
"""

from .algebra import (
    Expression,
    Generator,
    J,
    commutator,
    dot_derivative,
    expr,
    generator,
    substitute,
)
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InconsistentRelations,
    InvalidParameter,
    NCWorldsError,
    NonCyclicTensor,
    NonPolynomialHamiltonian,
    ParseError,
    UnknownGenerator,
    WindowTooShort,
)
from .exprparse import parse, parse_scalar
from .rewrite import RelationSet, is_zero, normalize
from .scalars import Scalar, declare_parameter, parameter
from .veccalc import (
    EPSILON,
    StructureConstants,
    VectorExpr,
    cross,
    curl,
    divergence,
    dot,
    epsilon_contract,
    laplacian,
    partial_i,
    partial_t,
)

__version__ = "0.1.0"

__all__ = [
    "EPSILON",
    "DimensionMismatch",
    "Expression",
    "Generator",
    "IndexOutOfRange",
    "InconsistentRelations",
    "InvalidParameter",
    "J",
    "NCWorldsError",
    "NonCyclicTensor",
    "NonPolynomialHamiltonian",
    "ParseError",
    "RelationSet",
    "Scalar",
    "StructureConstants",
    "UnknownGenerator",
    "VectorExpr",
    "WindowTooShort",
    "commutator",
    "cross",
    "curl",
    "declare_parameter",
    "divergence",
    "dot",
    "dot_derivative",
    "epsilon_contract",
    "expr",
    "generator",
    "is_zero",
    "laplacian",
    "normalize",
    "parameter",
    "parse",
    "parse_scalar",
    "partial_i",
    "partial_t",
    "substitute",
]
