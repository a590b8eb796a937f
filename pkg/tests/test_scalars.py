"""Exact coefficient arithmetic: canonical forms, parameters, the unit i."""

from fractions import Fraction

import pytest

from ncworlds.scalars import (
    I,
    ONE,
    ZERO,
    Scalar,
    declare_parameter,
    parameter,
    parameter_names,
)


def test_rational_arithmetic_is_exact():
    a = Scalar(Fraction(1, 3))
    assert a + a + a == ONE
    assert a * 3 == ONE
    assert (a / 7) * 21 == ONE
    assert Scalar(10) ** 20 == Scalar(10 ** 20)


def test_imaginary_unit():
    assert I * I == Scalar(-1)
    assert ONE / I == -I
    assert (1 + I) * (1 - I) == Scalar(2)


def test_default_parameters_exist():
    for name in ("tau", "hbar", "dt", "h", "k"):
        assert name in parameter_names()
        assert not parameter(name).is_zero


def test_rational_function_cancellation_is_canonical():
    tau = parameter("tau")
    assert (tau * tau - 1) / (tau - 1) == tau + 1
    assert tau / tau == ONE
    assert (tau / tau).is_constant
    assert hash((tau * tau - 1) / (tau - 1)) == hash(tau + 1)


def test_mixed_constant_and_function_never_compare_equal():
    tau = parameter("tau")
    assert tau != ONE
    assert (tau - tau) == ZERO
    assert (tau - tau).is_constant


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    tau = parameter("tau")
    with pytest.raises(ZeroDivisionError):
        tau / (tau - tau)


def test_declare_parameter_extends_the_field():
    nu = declare_parameter("nu")
    tau = parameter("tau")
    old = tau + 1
    assert old * nu / nu == old
    assert (old * nu).text() == "(tau*nu + nu)"


def test_reserved_names_rejected():
    with pytest.raises(ValueError):
        declare_parameter("i")
    with pytest.raises(ValueError):
        declare_parameter("J")


def test_as_fraction():
    assert (Scalar(3) / 2).as_fraction() == Fraction(3, 2)
    with pytest.raises(ValueError):
        I.as_fraction()
    with pytest.raises(ValueError):
        parameter("tau").as_fraction()


def test_unknown_parameter_requires_declaration():
    with pytest.raises(ValueError):
        parameter("undeclared_name_xyz")


def test_text_forms_parse_back():
    from ncworlds.exprparse import parse_scalar

    tau, hbar = parameter("tau"), parameter("hbar")
    samples = [
        Scalar(0),
        Scalar(-7),
        Scalar(3) / 2,
        I,
        -I,
        1 + 2 * I,
        Fraction(5, 3) * I - 2,
        tau,
        -tau,
        (1 + I * tau) / (2 * hbar),
        (tau ** 2 - 1) / (tau + 2),
        tau * hbar / 4 - I,
    ]
    for s in samples:
        assert parse_scalar(s.text()) == s, s.text()
