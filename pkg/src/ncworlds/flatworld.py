"""Verifications in the flat-coordinate quotient and its gauge extension.

Flat coordinates satisfy [X_i, X_j] = [P_i, P_j] = 0 and [X_i, P_j] =
delta_ij, with normal ordering putting X-monomials left of P-monomials.  In
that quotient, [X_i, .] acts as the polynomial partial derivative by P_i and
[., P_i] as the one by X_i -- Hamilton's equations are the special case
applied to a Hamiltonian element.  The gauge layer rewrites a dynamical
velocity as G_i = P_i - A_i, from which the standard curvature formula
R_ij = d_i A_j - d_j A_i + [A_i, A_j] and the commutator-of-derivations
identity follow.
"""

from __future__ import annotations

from .algebra import Expression, Generator, commutator, expr, generator
from .errors import IndexOutOfRange, NonPolynomialHamiltonian
from .reporting import CheckReport, CheckRow
from .rewrite import RelationSet
from .scalars import I, parameter


def position(i: int) -> Expression:
    return Expression.from_generator(generator("X", i))


def momentum(i: int) -> Expression:
    return Expression.from_generator(generator("P", i))


def poly_partial(e: Expression, g: Generator) -> Expression:
    """Polynomial partial derivative of a normal-ordered expression by the
    generator ``g``: each word contributes (count of g) times the word with
    one occurrence removed.  Independent of the commutator machinery; used
    as the oracle that the commutator derivatives are checked against."""
    out = Expression.zero()
    for word, coeff in expr(e).terms():
        n = word.count(g)
        if n:
            pos = word.index(g)
            out = out + Expression.from_word(word[:pos] + word[pos + 1:], coeff * n)
    return out


class FlatContext:
    """Dimension, the Weyl relation set, and a distinguished Hamiltonian."""

    __slots__ = ("dim", "relations", "hamiltonian")

    def __init__(self, dim: int, hamiltonian):
        self.dim = dim
        self.relations = RelationSet.flat(dim)
        self.hamiltonian = expr(hamiltonian)
        self._validate(self.hamiltonian)

    def _validate(self, H: Expression) -> None:
        for g in H.generators():
            if g.is_shift or g.dot_order or g.shift_order:
                raise NonPolynomialHamiltonian(
                    f"Hamiltonian contains {g.text()}; only polynomials in X_i, P_i are allowed"
                )
        self.relations.check_coverage(H)


def hamilton_check(ctx: FlatContext) -> CheckReport:
    """dX_i/dt = [X_i, H] = dH/dP_i and dP_i/dt = [P_i, H] = -dH/dX_i,
    the commutator side normalized by the Weyl rewrite rules and the partial
    derivative side computed polynomially on the normal-ordered H."""
    report = CheckReport("hamilton")
    rel = ctx.relations
    Hn = rel.normalize(ctx.hamiltonian)
    for i in range(1, ctx.dim + 1):
        lhs_x = rel.normalize(commutator(position(i), ctx.hamiltonian))
        rhs_x = poly_partial(Hn, generator("P", i))
        res_x = lhs_x - rhs_x
        report.rows.append(CheckRow(
            f"[X{i},H] = dH/dP{i}", res_x,
            lhs_x.n_terms + rhs_x.n_terms, res_x.is_zero,
        ))
        lhs_p = rel.normalize(commutator(momentum(i), ctx.hamiltonian))
        rhs_p = -poly_partial(Hn, generator("X", i))
        res_p = lhs_p - rhs_p
        report.rows.append(CheckRow(
            f"[P{i},H] = -dH/dX{i}", res_p,
            lhs_p.n_terms + rhs_p.n_terms, res_p.is_zero,
        ))
    return report


def heisenberg_check() -> CheckReport:
    """With J = 1 + H*dt/(i*hbar), the discrete derivative grad(psi) =
    [psi, J/dt] satisfies i*hbar*grad(psi) = [psi, H] identically: the
    Heisenberg form of the Schroedinger equation, verified by substitution
    in the free algebra."""
    from .algebra import J, substitute

    psi = Expression.from_generator(generator("psi"))
    H = Expression.from_generator(generator("H"))
    dt, hbar = parameter("dt"), parameter("hbar")
    grad_psi = commutator(psi, Expression.from_generator(J)) / dt
    grad_psi = substitute(grad_psi, J, 1 + H * (dt / (I * hbar)))
    residual = I * hbar * grad_psi - commutator(psi, H)
    report = CheckReport("heisenberg")
    report.rows.append(CheckRow(
        "i*hbar*grad(psi) = [psi, H]", residual,
        grad_psi.n_terms + 2, residual.is_zero,
    ))
    return report


class GaugeContext:
    """Momenta with [P_i, P_j] = 0 and fully free potentials A_i (or caller-
    supplied potential expressions); G_i = P_i - A_i by definition."""

    __slots__ = ("dim", "potentials")

    def __init__(self, dim: int, potentials=None):
        if dim < 1:
            raise IndexOutOfRange("gauge context needs dimension >= 1")
        self.dim = dim
        if potentials is None:
            potentials = [Expression.from_generator(generator("A", i))
                          for i in range(1, dim + 1)]
        if len(potentials) != dim:
            raise IndexOutOfRange("one potential per dimension required")
        self.potentials = [expr(a) for a in potentials]

    def potential(self, i: int) -> Expression:
        self._check(i)
        return self.potentials[i - 1]

    def velocity_element(self, i: int) -> Expression:
        """G_i = P_i - A_i."""
        self._check(i)
        return momentum(i) - self.potentials[i - 1]

    def relations_for(self, *extra: Expression) -> RelationSet:
        """The quotient [P_i, P_j] = 0 with every other generator in sight
        declared inert (free)."""
        ps = [generator("P", i) for i in range(1, self.dim + 1)]
        declared = set(ps)
        for a in self.potentials:
            declared.update(a.generators())
        for e in extra:
            declared.update(expr(e).generators())
        rules = {(ps[a], ps[b]): 0 for a in range(self.dim) for b in range(a)}
        return RelationSet.custom(declared, rules)

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.dim:
            raise IndexOutOfRange(f"index {i} outside 1..{self.dim}")


def curvature(ctx: GaugeContext, i: int, j: int) -> Expression:
    """R_ij = d_i A_j - d_j A_i + [A_i, A_j] with d_i F = [F, P_i],
    normalized under [P_i, P_j] = 0."""
    ctx._check(i), ctx._check(j)
    ai, aj = ctx.potential(i), ctx.potential(j)
    raw = commutator(aj, momentum(i)) - commutator(ai, momentum(j)) + commutator(ai, aj)
    return ctx.relations_for().normalize(raw)


def curvature_check(ctx: GaugeContext, i: int, j: int, F) -> Expression:
    """Residual of [grad_i, grad_j]F = [R_ij, F] with grad_i(F) = [F, G_i];
    zero is the Jacobi identity in disguise."""
    ctx._check(i), ctx._check(j)
    Fe = expr(F)
    gi, gj = ctx.velocity_element(i), ctx.velocity_element(j)
    lhs = commutator(commutator(Fe, gj), gi) - commutator(commutator(Fe, gi), gj)
    rhs = commutator(curvature(ctx, i, j), Fe)
    return ctx.relations_for(Fe).normalize(lhs - rhs)


def curvature_report(ctx: GaugeContext, F=None) -> CheckReport:
    """curvature_check across all index pairs, plus antisymmetry of R."""
    if F is None:
        F = Expression.from_generator(generator("F"))
    report = CheckReport("curvature")
    rel = ctx.relations_for(expr(F))
    for i in range(1, ctx.dim + 1):
        for j in range(1, ctx.dim + 1):
            if i == j:
                continue
            res = curvature_check(ctx, i, j, F)
            report.rows.append(CheckRow(
                f"[grad_{i},grad_{j}]F = [R_{i}{j},F]", res, 0, res.is_zero))
    for i in range(1, ctx.dim + 1):
        for j in range(i + 1, ctx.dim + 1):
            anti = rel.normalize(curvature(ctx, i, j) + curvature(ctx, j, i))
            report.rows.append(CheckRow(
                f"R_{i}{j} + R_{j}{i} = 0", anti, 0, anti.is_zero))
    return report
