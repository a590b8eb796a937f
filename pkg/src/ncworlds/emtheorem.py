"""The generalized electromagnetic identities in the free algebra.

Everything here is built from three velocity coordinates Xdot_1..Xdot_3 (or
d of them for a general structure-constant tensor) with *no commutation
relations assumed*, the magnetic field B = Xdot x Xdot, the electric field
E = dt(Xdot), and the derivative definitions from the vector-calculus layer.
The four central identities then hold as exact normal-form equalities:

    1. Xddot = E + Xdot x B                      (Lorentz force law)
    2. div B = 0
    3. dt(B) + curl E = B x B                    (B x B survives because the
                                                  components of B do not
                                                  commute)
    4. dt(E) - curl B = (dt^2 - laplacian) Xdot

Each verifier returns the exact residual rather than asserting, so the same
harness measures which identities survive for arbitrary cyclic-invariant
structure constants.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

from .algebra import Expression, commutator, dot_derivative, expr, generator
from .errors import DimensionMismatch, NonCyclicTensor
from .reporting import CheckReport, CheckRow
from .rewrite import RelationSet
from .scalars import Scalar, coerce_scalar
from .veccalc import (
    EPSILON,
    StructureConstants,
    VectorExpr,
    cross,
    curl,
    divergence,
    dot,
    laplacian,
    partial_t,
    velocity,
    velocity_vector,
)


class EMContext:
    """Structure constants, the velocity vector, the derived fields, and the
    quotient (default: free) in which residuals are normalized."""

    __slots__ = ("f", "dim", "xdot", "relations", "_b", "_e")

    def __init__(self, f: StructureConstants = EPSILON, relations: RelationSet | None = None):
        self.f = f
        self.dim = f.dim
        self.xdot = velocity_vector(self.dim)
        self.relations = relations if relations is not None else RelationSet.free()
        self._b = None
        self._e = None

    @property
    def b_field(self) -> VectorExpr:
        if self._b is None:
            self._b = cross(self.xdot, self.xdot, self.f)
        return self._b

    @property
    def e_field(self) -> VectorExpr:
        if self._e is None:
            self._e = partial_t(self.xdot, self.dim)
        return self._e

    @property
    def xddot(self) -> VectorExpr:
        return self.xdot.map(dot_derivative)


def _vector_report(name: str, ctx: EMContext, pieces: list[VectorExpr]) -> CheckReport:
    """Sum the piece vectors, normalize componentwise, record counts."""
    t0 = time.perf_counter()
    report = CheckReport(name)
    for k in range(1, ctx.dim + 1):
        parts = [p.component(k) for p in pieces]
        before = sum(p.n_terms for p in parts)
        residual = ctx.relations.normalize(sum(parts, Expression.zero()))
        report.rows.append(CheckRow(f"component {k}", residual, before, residual.is_zero))
    report.wall_time = time.perf_counter() - t0
    return report


def verify_acceleration(ctx: EMContext) -> CheckReport:
    """Xddot = dt(Xdot) + Xdot x (Xdot x Xdot): the acceleration identity all
    four equations rest on; immediate from the derivative definitions."""
    triple = cross(ctx.xdot, cross(ctx.xdot, ctx.xdot, ctx.f), ctx.f)
    return _vector_report(
        "acceleration", ctx,
        [ctx.xddot, -partial_t(ctx.xdot, ctx.dim), -triple],
    )


def verify_lorentz(ctx: EMContext) -> CheckReport:
    """Xddot = E + Xdot x B."""
    return _vector_report(
        "lorentz", ctx,
        [ctx.xddot, -ctx.e_field, -cross(ctx.xdot, ctx.b_field, ctx.f)],
    )


def verify_div_b(ctx: EMContext) -> CheckReport:
    """div B = 0; only cyclic invariance of the tensor is used."""
    t0 = time.perf_counter()
    div = divergence(ctx.b_field)
    residual = ctx.relations.normalize(div)
    report = CheckReport("div_b")
    report.rows.append(CheckRow("div B", residual, div.n_terms, residual.is_zero))
    report.wall_time = time.perf_counter() - t0
    return report


def verify_faraday(ctx: EMContext) -> CheckReport:
    """dt(B) + curl E = B x B."""
    return _vector_report(
        "faraday", ctx,
        [
            partial_t(ctx.b_field, ctx.dim),
            curl(ctx.e_field, ctx.f),
            -cross(ctx.b_field, ctx.b_field, ctx.f),
        ],
    )


def verify_ampere(ctx: EMContext) -> CheckReport:
    """dt(E) - curl B = (dt^2 - laplacian) Xdot; needs dot orders up to 3 in
    the intermediate terms, which makes it the term-count stress test."""
    dt_e = partial_t(ctx.e_field, ctx.dim)
    dt2 = partial_t(partial_t(ctx.xdot, ctx.dim), ctx.dim)
    return _vector_report(
        "ampere", ctx,
        [dt_e, -curl(ctx.b_field, ctx.f), -dt2, laplacian(ctx.xdot, ctx.dim)],
    )


VERIFIERS = {
    "acceleration": verify_acceleration,
    "lorentz": verify_lorentz,
    "div_b": verify_div_b,
    "faraday": verify_faraday,
    "ampere": verify_ampere,
}

THEOREM_CHECKS = ("lorentz", "div_b", "faraday", "ampere")


def run_suite(ctx: EMContext, names=None, threads: int = 1) -> list[CheckReport]:
    """Run the named verifications (default: acceleration + the four Theorem
    items).  Independent pure computations; results merge in a fixed order
    regardless of thread count."""
    if names is None:
        names = ("acceleration",) + THEOREM_CHECKS
    unknown = [n for n in names if n not in VERIFIERS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {name: pool.submit(VERIFIERS[name], ctx) for name in names}
            return [futures[name].result() for name in names]
    return [VERIFIERS[name](ctx) for name in names]


# -- quotient specializations -------------------------------------------------


def dotted_family(dim: int = 3, max_dot: int = 3):
    """All velocity-family generators the suites touch: dot orders 1..max_dot."""
    return [generator("X", i, dot=d)
            for d in range(1, max_dot + 1) for i in range(1, dim + 1)]


def central_specialization(values, dim: int = 3, max_dot: int = 3) -> RelationSet:
    """Quotient with [Xdot_i, Xdot_j] = c_ij central scalars; higher dots
    stay free.  ``values[(i, j)]`` for i > j gives c_ij (antisymmetry fills
    the rest)."""
    rules = {}
    for i in range(2, dim + 1):
        for j in range(1, i):
            c = coerce_scalar(values.get((i, j), 0)) if values else Scalar(0)
            rules[(generator("X", i, dot=1), generator("X", j, dot=1))] = c
    return RelationSet.custom(dotted_family(dim, max_dot), rules)


def commuting_specialization(dim: int = 3, max_dot: int = 3) -> RelationSet:
    """Everything in the velocity family commutes: the classical limit, in
    which B x B and the triple cross term vanish."""
    gens = dotted_family(dim, max_dot)
    rules = {}
    for a in range(len(gens)):
        for b in range(a):
            rules[(gens[a], gens[b])] = 0
    return RelationSet.custom(gens, rules)


# -- the Jacobi-extension identity --------------------------------------------


def jacobi_correction(f: StructureConstants, a: VectorExpr, b: VectorExpr,
                      c: VectorExpr) -> VectorExpr:
    """The correction term T with A x (B x C) = (A x B) x C + T(A, B, C).

    Derived by brute-force expansion over free generators (the printed form
    of this term in the source material is ambiguous): T_r = sum over
    a,b,c,m of f_cam * f_mbr * A_a B_b C_c, letters kept in A,B,C order.
    Besides cyclic invariance the derivation uses antisymmetry of f in its
    first two indices, which any Lie-algebra structure constant satisfies.
    """
    if not (a.dim == b.dim == c.dim == f.dim):
        raise DimensionMismatch("jacobi correction operands disagree on dimension")
    d = f.dim
    out = []
    for r in range(1, d + 1):
        acc = Expression.zero()
        for ia in range(1, d + 1):
            for ib in range(1, d + 1):
                for ic in range(1, d + 1):
                    coeff = Scalar(0)
                    for m in range(1, d + 1):
                        coeff = coeff + f[ic, ia, m] * f[m, ib, r]
                    if not coeff.is_zero:
                        acc = acc + a.component(ia) * b.component(ib) * c.component(ic) * coeff
        out.append(acc)
    return VectorExpr(out)


def jacobi_extension_check(f: StructureConstants, a: VectorExpr, b: VectorExpr,
                           c: VectorExpr) -> VectorExpr:
    """Residual of A x (B x C) - (A x B) x C - T(A, B, C), collected in the
    free algebra; zero whenever f is a Lie-algebra structure constant
    (cyclic, antisymmetric, Jacobi)."""
    if not f.is_antisymmetric:
        raise NonCyclicTensor(
            "jacobi extension needs antisymmetric structure constants"
        )
    lhs = cross(a, cross(b, c, f), f)
    mid = cross(cross(a, b, f), c, f)
    t = jacobi_correction(f, a, b, c)
    return lhs - mid - t
