"""Epsilon-tensor and structure-constant vector calculus over expressions.

Cross products, dot products, curl, divergence, and the spatial/temporal
partials are all defined through commutators with the velocity generators
Xdot_i = [F, Xdot_i], so operand order matters everywhere: a cross product
keeps A-components to the left of B-components, the temporal partial keeps
Xdot_i on the left, and curl contracts f_ijk with the derivative acting on
the j-th component.  Reordering any of these changes the result in a
non-commutative algebra, so the orders are frozen exactly as used by the
derivations this engine verifies.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import Expression, commutator, dot_derivative, expr, generator
from .errors import DimensionMismatch, IndexOutOfRange, NonCyclicTensor
from .scalars import Scalar, coerce_scalar


def velocity(i: int) -> Expression:
    """The velocity generator Xdot_i as an expression."""
    return Expression.from_generator(generator("X", i, dot=1))


def velocity_vector(dim: int = 3) -> "VectorExpr":
    return VectorExpr([velocity(i) for i in range(1, dim + 1)])


class StructureConstants:
    """Dense rank-3 tensor of Scalars with cyclic invariance f_ijk = f_kij.

    The so(3) instance is the epsilon tensor; ``contract`` implements the
    double-epsilon contraction used by the epsilon identity.
    """

    __slots__ = ("dim", "_f")

    def __init__(self, dim: int, entries):
        if dim < 1:
            raise DimensionMismatch("structure constants need dimension >= 1")
        self.dim = dim
        f = [[[Scalar(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in entries.items() if isinstance(entries, dict) else entries:
            self._check_index(i), self._check_index(j), self._check_index(k)
            f[i - 1][j - 1][k - 1] = coerce_scalar(value)
        self._f = tuple(tuple(tuple(row) for row in plane) for plane in f)
        for i in range(1, dim + 1):
            for j in range(1, dim + 1):
                for k in range(1, dim + 1):
                    if self[i, j, k] != self[k, i, j]:
                        raise NonCyclicTensor(
                            f"f[{i},{j},{k}] != f[{k},{i},{j}]: cyclic invariance fails"
                        )

    def _check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.dim:
            raise IndexOutOfRange(f"index {i} outside 1..{self.dim}")

    def __getitem__(self, ijk) -> Scalar:
        i, j, k = ijk
        self._check_index(i), self._check_index(j), self._check_index(k)
        return self._f[i - 1][j - 1][k - 1]

    @property
    def is_antisymmetric(self) -> bool:
        """Antisymmetry in the first two indices (true for any Lie bracket)."""
        rng = range(1, self.dim + 1)
        return all(self[i, j, k] == -self[j, i, k] for i in rng for j in rng for k in rng)

    def contract(self, a: int, b: int, c: int, d: int) -> Scalar:
        """Sum_i f_abi * f_cdi."""
        for idx in (a, b, c, d):
            self._check_index(idx)
        out = Scalar(0)
        for i in range(1, self.dim + 1):
            out = out + self[a, b, i] * self[c, d, i]
        return out

    @staticmethod
    def so3() -> "StructureConstants":
        return EPSILON

    @staticmethod
    def from_dict(doc: dict) -> "StructureConstants":
        from .exprparse import parse_scalar

        dim = doc.get("dimension")
        if not isinstance(dim, int):
            raise ValueError("structure-constant document needs integer 'dimension'")
        entries = []
        for row in doc.get("entries", []):
            i, j, k, literal = row
            if isinstance(literal, str):
                value = parse_scalar(literal)
            elif isinstance(literal, int):
                value = Scalar(literal)
            else:
                raise ValueError(f"entry value must be a scalar literal: {literal!r}")
            entries.append(((i, j, k), value))
        return StructureConstants(dim, entries)

    @staticmethod
    def from_json(path: str) -> "StructureConstants":
        with open(path, "r", encoding="utf-8") as fh:
            return StructureConstants.from_dict(json.load(fh))

    def __repr__(self):
        return f"<StructureConstants dim={self.dim}>"


def _epsilon() -> StructureConstants:
    entries = []
    for (i, j, k), sign in {
        (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
        (1, 3, 2): -1, (3, 2, 1): -1, (2, 1, 3): -1,
    }.items():
        entries.append(((i, j, k), Scalar(sign)))
    return StructureConstants(3, entries)


EPSILON = _epsilon()


def load_structure_constants(source: str) -> StructureConstants:
    """Resolve the CLI/file interface: builtin name 'so3' or a JSON path."""
    if source == "so3":
        return EPSILON
    return StructureConstants.from_json(source)


def epsilon_contract(a: int, b: int, c: int, d: int) -> Scalar:
    """Sum_i epsilon_abi * epsilon_cdi (indices 1..3)."""
    return EPSILON.contract(a, b, c, d)


class VectorExpr:
    """Fixed-length ordered sequence of Expressions with componentwise +/-."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence):
        self.components = tuple(expr(c) for c in components)
        if not self.components:
            raise DimensionMismatch("vectors need at least one component")

    @staticmethod
    def zero(dim: int) -> "VectorExpr":
        return VectorExpr([Expression.zero()] * dim)

    @property
    def dim(self) -> int:
        return len(self.components)

    def component(self, i: int) -> Expression:
        if not 1 <= i <= self.dim:
            raise IndexOutOfRange(f"component {i} outside 1..{self.dim}")
        return self.components[i - 1]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def map(self, fn) -> "VectorExpr":
        return VectorExpr([fn(c) for c in self.components])

    def __add__(self, other):
        self._match(other)
        return VectorExpr([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        self._match(other)
        return VectorExpr([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return VectorExpr([-a for a in self.components])

    def __mul__(self, scalar):
        if isinstance(scalar, (Scalar, int, Fraction)):
            return VectorExpr([c * scalar for c in self.components])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VectorExpr) and self.components == other.components

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def _match(self, other) -> None:
        if not isinstance(other, VectorExpr) or other.dim != self.dim:
            raise DimensionMismatch("vector dimensions differ")

    def text(self) -> str:
        return "(" + ", ".join(c.text() for c in self.components) + ")"

    def __repr__(self):
        return f"VectorExpr{self.text()}"


def cross(a: VectorExpr, b: VectorExpr, f: StructureConstants = EPSILON) -> VectorExpr:
    """(a x b)_k = sum_ij f_ijk * a_i * b_j, a-factors left of b-factors."""
    if not (a.dim == b.dim == f.dim):
        raise DimensionMismatch(
            f"cross dimensions differ: {a.dim}, {b.dim}, tensor {f.dim}"
        )
    d = f.dim
    out = []
    for k in range(1, d + 1):
        acc = Expression.zero()
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                c = f[i, j, k]
                if not c.is_zero:
                    acc = acc + a.component(i) * b.component(j) * c
        out.append(acc)
    return VectorExpr(out)


def dot(a: VectorExpr, b: VectorExpr) -> Expression:
    """sum_i a_i * b_i with a-factors on the left."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dot dimensions differ: {a.dim} vs {b.dim}")
    acc = Expression.zero()
    for i in range(1, a.dim + 1):
        acc = acc + a.component(i) * b.component(i)
    return acc


def partial_i(F: Expression, i: int, dim: int = 3) -> Expression:
    """Spatial derivative: [F, Xdot_i]. A derivation, being a commutator."""
    if not 1 <= i <= dim:
        raise IndexOutOfRange(f"index {i} outside 1..{dim}")
    return commutator(expr(F), velocity(i))


def partial_t(F, dim: int = 3):
    """Temporal derivative: F-dot - sum_i Xdot_i*[F, Xdot_i].

    Not a derivation; its Leibniz defect is exactly
    sum_i partial_i(F)*partial_i(G).  Componentwise on VectorExpr.
    """
    if isinstance(F, VectorExpr):
        return F.map(lambda c: partial_t(c, dim))
    e = expr(F)
    acc = dot_derivative(e)
    for i in range(1, dim + 1):
        acc = acc - velocity(i) * commutator(e, velocity(i))
    return acc


def divergence(B: VectorExpr) -> Expression:
    """sum_i [B_i, Xdot_i]."""
    acc = Expression.zero()
    for i in range(1, B.dim + 1):
        acc = acc + commutator(B.component(i), velocity(i))
    return acc


def curl(E: VectorExpr, f: StructureConstants = EPSILON) -> VectorExpr:
    """(curl E)_k = sum_ij f_ijk * [E_j, Xdot_i]  (the derivative acts on E_j)."""
    if E.dim != f.dim:
        raise DimensionMismatch(f"curl dimensions differ: {E.dim} vs tensor {f.dim}")
    d = f.dim
    out = []
    for k in range(1, d + 1):
        acc = Expression.zero()
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                c = f[i, j, k]
                if not c.is_zero:
                    acc = acc + commutator(E.component(j), velocity(i)) * c
        out.append(acc)
    return VectorExpr(out)


def laplacian(F, dim: int = 3):
    """sum_i [[F, Xdot_i], Xdot_i]. Componentwise on VectorExpr."""
    if isinstance(F, VectorExpr):
        return F.map(lambda c: laplacian(c, dim))
    e = expr(F)
    acc = Expression.zero()
    for i in range(1, dim + 1):
        acc = acc + commutator(commutator(e, velocity(i)), velocity(i))
    return acc


def bac_cab_residual(a: VectorExpr, b: VectorExpr, c: VectorExpr) -> VectorExpr:
    """Exact residual of A x (B x C) - ((A.C)B - (A.B)C) with the epsilon
    tensor.  Zero when all components commute; generally nonzero in the free
    algebra (returned for inspection, never asserted away)."""
    for v in (a, b, c):
        if v.dim != 3:
            raise DimensionMismatch("the bac-cab identity is three-dimensional")
    lhs = cross(a, cross(b, c, EPSILON), EPSILON)
    ac, ab = dot(a, c), dot(a, b)
    rhs = VectorExpr([ac * b.component(k) - ab * c.component(k) for k in (1, 2, 3)])
    return lhs - rhs
