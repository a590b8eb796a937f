"""Free-algebra layer: expressions, commutators, the dot derivation,
substitution."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncworlds.algebra import (
    Expression,
    J,
    commutator,
    dot_derivative,
    generator,
    substitute,
)
from ncworlds.identities import random_expression
from ncworlds.scalars import I, Scalar, parameter

X1 = Expression.from_generator(generator("X", 1))
X2 = Expression.from_generator(generator("X", 2))
Y = Expression.from_generator(generator("Y"))
JE = Expression.from_generator(J)


def test_additive_identity_and_inverse():
    assert X1 + Expression.zero() == X1
    assert (X1 + (-1) * X1).is_zero


def test_like_term_collection():
    assert 2 * (X1 * X2) + 3 * (X1 * X2) == 5 * (X1 * X2)


def test_free_product_is_noncommutative():
    assert X1 * X2 != X2 * X1
    assert Expression.from_scalar(1) * Y == Y
    assert (X1 + X2) * Y == X1 * Y + X2 * Y


def test_zero_coefficients_are_dropped():
    e = X1 * X2 - X1 * X2 + Y
    assert e.n_terms == 1
    assert e == Y


def test_commutator_antisymmetry():
    f = X1 * X2 + 2 * Y
    assert commutator(f, f).is_zero
    assert commutator(X1, X2) == -commutator(X2, X1)


def test_dot_derivative_defining_cases():
    assert dot_derivative(X1) == Expression.from_generator(generator("X", 1, dot=1))
    assert dot_derivative(JE).is_zero
    assert dot_derivative(Expression.from_scalar(5)).is_zero


def test_dot_derivative_leibniz():
    xd1 = Expression.from_generator(generator("X", 1, dot=1))
    xd2 = Expression.from_generator(generator("X", 2, dot=1))
    lhs = dot_derivative(xd1 * xd2)
    xdd1 = Expression.from_generator(generator("X", 1, dot=2))
    xdd2 = Expression.from_generator(generator("X", 2, dot=2))
    assert lhs == xdd1 * xd2 + xd1 * xdd2


def test_substitute_trivial_cases():
    e = X1 * JE * X1
    assert substitute(e, J, Expression.from_scalar(1)) == X1 * X1
    g = generator("Y")
    f = X1 * Y + Y * Y
    assert substitute(f, g, Y) == f


def test_substitute_heisenberg_expansion():
    """psi*J - J*psi with J -> 1 + H*dt/(i*hbar) collapses to the commutator
    scaled by dt/(i*hbar)."""
    psi = Expression.from_generator(generator("psi"))
    H = Expression.from_generator(generator("H"))
    dt, hbar = parameter("dt"), parameter("hbar")
    replaced = substitute(psi * JE - JE * psi, J, 1 + H * (dt / (I * hbar)))
    assert replaced == (dt / (I * hbar)) * (psi * H - H * psi)


def test_substitute_is_multilinear():
    g = generator("Y")
    e = Y * Y
    rep = X1 + X2
    assert substitute(e, g, rep) == (X1 + X2) * (X1 + X2)


def test_scalar_coefficients_flow_through():
    e = (Scalar(1) / 2) * X1 - Fraction(1, 2) * X1
    assert e.is_zero


def test_power():
    assert X1 ** 0 == Expression.from_scalar(1)
    assert X1 ** 3 == X1 * X1 * X1


@st.composite
def small_expressions(draw):
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    pool = [generator("X", 1, dot=d) for d in (1, 2)] + [generator("Y"), J]
    return random_expression(rng, pool, max_terms=3, max_len=3)


@settings(max_examples=60, deadline=None)
@given(small_expressions(), small_expressions(), small_expressions())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=40, deadline=None)
@given(small_expressions(), small_expressions())
def test_commutator_is_bilinear(a, b):
    assert commutator(a + b, Y) == commutator(a, Y) + commutator(b, Y)
    assert commutator(Y, a + b) == commutator(Y, a) + commutator(Y, b)


def test_generator_validation():
    with pytest.raises(ValueError):
        generator("J")
    with pytest.raises(ValueError):
        generator("X", 0)
    with pytest.raises(ValueError):
        generator("Xdot")
    with pytest.raises(ValueError):
        generator("tau")
