"""Randomized and exhaustive structural identity checks.

These are the engine's self-tests exposed as library functions so both the
test suite and the ``identities`` CLI subcommand can run them: seeded
generators produce deterministic random expressions, each check replays an
identity the rest of the package relies on, and the result records how many
cases ran and which failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Expression, J, commutator, dot_derivative, generator
from .rewrite import RelationSet, normalize, normalize_randomized
from .scalars import Scalar
from .veccalc import EPSILON, epsilon_contract, partial_i, partial_t

_COEFFS = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, Fraction(1, 3))


def random_expression(rng: random.Random, pool, max_terms: int = 4,
                      max_len: int = 3, allow_unit: bool = True) -> Expression:
    """Deterministic random formal sum over the generator pool."""
    n_terms = rng.randint(1, max_terms)
    out = Expression.zero()
    for _ in range(n_terms):
        length = rng.randint(0 if allow_unit else 1, max_len)
        word = tuple(pool[rng.randrange(len(pool))] for _ in range(length))
        out = out + Expression.from_word(word, _COEFFS[rng.randrange(len(_COEFFS))])
    return out


def _velocity_pool(dim: int = 3, max_dot: int = 2):
    return [generator("X", i, dot=d) for d in range(1, max_dot + 1)
            for i in range(1, dim + 1)]


@dataclass
class IdentityResult:
    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_epsilon_identity() -> IdentityResult:
    """sum_i eps_abi*eps_cdi = delta_ac*delta_bd - delta_ad*delta_bc over all
    81 quadruples; the workhorse lemma behind every cross-product step."""
    result = IdentityResult("epsilon_identity", 81)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                for d in (1, 2, 3):
                    lhs = epsilon_contract(a, b, c, d)
                    rhs = Scalar(int(a == c) * int(b == d) - int(a == d) * int(b == c))
                    if lhs != rhs:
                        result.failures.append(f"({a},{b},{c},{d}): {lhs} != {rhs}")
    return result


def check_commutator_leibniz(seed: int, cases: int = 50) -> IdentityResult:
    """[AB, N] = [A, N]B + A[B, N] for random A, B and a generator N."""
    rng = random.Random(seed)
    pool = _velocity_pool()
    result = IdentityResult("commutator_leibniz", cases)
    for case in range(cases):
        a = random_expression(rng, pool)
        b = random_expression(rng, pool)
        n = Expression.from_generator(pool[rng.randrange(len(pool))])
        lhs = commutator(a * b, n)
        rhs = commutator(a, n) * b + a * commutator(b, n)
        if lhs != rhs:
            result.failures.append(f"case {case}")
    return result


def check_dot_derivative(seed: int, cases: int = 50) -> IdentityResult:
    """d(a + b) = d(a) + d(b) and d(ab) = d(a)b + a*d(b), exactly."""
    rng = random.Random(seed)
    pool = _velocity_pool() + [J]
    result = IdentityResult("dot_derivative_leibniz", cases)
    for case in range(cases):
        a = random_expression(rng, pool)
        b = random_expression(rng, pool)
        if dot_derivative(a + b) != dot_derivative(a) + dot_derivative(b):
            result.failures.append(f"case {case}: additivity")
        if dot_derivative(a * b) != dot_derivative(a) * b + a * dot_derivative(b):
            result.failures.append(f"case {case}: product rule")
    return result


def check_jacobi(seed: int, cases: int = 30) -> IdentityResult:
    """[[A,B],C] + [[B,C],A] + [[C,A],B] = 0 in the free algebra."""
    rng = random.Random(seed)
    pool = _velocity_pool()
    result = IdentityResult("jacobi", cases)
    for case in range(cases):
        a = random_expression(rng, pool, max_terms=3, max_len=2)
        b = random_expression(rng, pool, max_terms=3, max_len=2)
        c = random_expression(rng, pool, max_terms=3, max_len=2)
        total = (commutator(commutator(a, b), c)
                 + commutator(commutator(b, c), a)
                 + commutator(commutator(c, a), b))
        if not total.is_zero:
            result.failures.append(f"case {case}")
    return result


def check_discrete_leibniz(seed: int, cases: int = 30) -> IdentityResult:
    """The repaired discrete product rule: with grad(f) = [f, J/h] in shift
    mode, grad(fg) = grad(f)g + f*grad(g) for words in unshifted generators."""
    from .scalars import parameter

    rng = random.Random(seed)
    rel = RelationSet.shift()
    h = parameter("h")
    je = Expression.from_generator(J)
    pool = [generator(n) for n in ("X", "Y", "Z")]
    result = IdentityResult("discrete_leibniz", cases)

    def grad(f):
        return commutator(f, je) / h

    for case in range(cases):
        f = random_expression(rng, pool, max_terms=3, max_len=3)
        g = random_expression(rng, pool, max_terms=3, max_len=3)
        lhs = rel.normalize(grad(f * g))
        rhs = rel.normalize(grad(f) * g + f * grad(g))
        if lhs != rhs:
            result.failures.append(f"case {case}")
    return result


def check_product_rule_defect(seed: int, cases: int = 200, dim: int = 3) -> IdentityResult:
    """dt(FG) = dt(F)G + F*dt(G) + sum_i di(F)*di(G): the temporal partial
    is not a derivation, and this is its exact defect."""
    rng = random.Random(seed)
    pool = _velocity_pool(dim)
    result = IdentityResult("product_rule_defect", cases)
    for case in range(cases):
        f = random_expression(rng, pool, max_terms=4, max_len=3)
        g = random_expression(rng, pool, max_terms=4, max_len=3)
        lhs = partial_t(f * g, dim)
        rhs = partial_t(f, dim) * g + f * partial_t(g, dim)
        for i in range(1, dim + 1):
            rhs = rhs + partial_i(f, i, dim) * partial_i(g, i, dim)
        if lhs != rhs:
            result.failures.append(f"case {case}")
    return result


def _pool_for_mode(mode: str):
    if mode == "flat":
        return ([generator("X", i) for i in (1, 2)]
                + [generator("P", i) for i in (1, 2)])
    pool = _velocity_pool(2, max_dot=1) + [generator("Y"), generator("Z")]
    if mode == "shift":
        pool = pool + [J, J]
    return pool


def _relations_for_mode(mode: str) -> RelationSet:
    if mode == "free":
        return RelationSet.free()
    if mode == "shift":
        return RelationSet.shift()
    if mode == "flat":
        return RelationSet.flat(2)
    raise ValueError(f"unknown mode {mode!r}")


def check_normalize_hygiene(seed: int, cases: int = 500,
                            modes=("free", "shift", "flat")) -> IdentityResult:
    """normalize is idempotent, and two independently seeded random rewrite
    orders reach the same normal form (confluence)."""
    result = IdentityResult("normalize_hygiene", 0)
    offsets = {"free": 0, "shift": 101, "flat": 202}
    for mode in modes:
        rng = random.Random(seed + offsets.get(mode, 303))
        rel = _relations_for_mode(mode)
        pool = _pool_for_mode(mode)
        for case in range(cases):
            e = random_expression(rng, pool, max_terms=4, max_len=4)
            nf = normalize(e, rel)
            result.cases += 1
            if normalize(nf, rel) != nf:
                result.failures.append(f"{mode} case {case}: not idempotent")
                continue
            r1 = normalize_randomized(e, rel, random.Random(9000 + case))
            r2 = normalize_randomized(e, rel, random.Random(7000 + 31 * case))
            if r1 != nf or r2 != nf:
                result.failures.append(f"{mode} case {case}: order-dependent")
    return result


def check_partial_i_derivation(seed: int, cases: int = 50, dim: int = 3) -> IdentityResult:
    """di(FG) = di(F)G + F*di(G): the spatial partial is a commutator."""
    rng = random.Random(seed)
    pool = _velocity_pool(dim)
    result = IdentityResult("partial_i_derivation", cases)
    for case in range(cases):
        f = random_expression(rng, pool)
        g = random_expression(rng, pool)
        i = rng.randint(1, dim)
        lhs = partial_i(f * g, i, dim)
        rhs = partial_i(f, i, dim) * g + f * partial_i(g, i, dim)
        if lhs != rhs:
            result.failures.append(f"case {case}")
    return result


IDENTITY_CHECKS = {
    "epsilon": lambda seed, cases: check_epsilon_identity(),
    "commutator_leibniz": check_commutator_leibniz,
    "dot_derivative": check_dot_derivative,
    "jacobi": check_jacobi,
    "discrete_leibniz": check_discrete_leibniz,
    "product_rule_defect": check_product_rule_defect,
    "partial_i_derivation": check_partial_i_derivation,
    "normalize_hygiene": lambda seed, cases: check_normalize_hygiene(seed, cases),
}


def run_identities(seed: int = 0, cases: int = 50, names=None) -> list[IdentityResult]:
    if names is None:
        names = list(IDENTITY_CHECKS)
    unknown = [n for n in names if n not in IDENTITY_CHECKS]
    if unknown:
        raise KeyError(f"unknown identity checks: {', '.join(unknown)}")
    return [IDENTITY_CHECKS[name](seed, cases) for name in names]
