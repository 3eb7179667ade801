from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigrel.errors import BackendMismatch, DomainError, NonConstructibleExact
from sigrel.scalar import APPROX, EXACT, Backend, Scalar, approx_backend, backend_named, sqrt

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@given(fractions, fractions, fractions)
def test_exact_backend_is_a_field(a, b, c):
    x, y, z = EXACT(a), EXACT(b), EXACT(c)
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if b:
        assert (x / y) * y == x


@given(fractions, fractions)
def test_exact_arithmetic_matches_fractions(a, b):
    assert (EXACT(a) * EXACT(b)).value == a * b
    assert (EXACT(a) - EXACT(b)).value == a - b


@given(st.fractions(min_value=0, max_value=50, max_denominator=20))
def test_exact_sqrt_of_squares(q):
    assert sqrt(EXACT(q * q)) == q


def test_exact_sqrt_refuses_irrationals():
    with pytest.raises(NonConstructibleExact):
        sqrt(EXACT(2))
    with pytest.raises(DomainError):
        sqrt(EXACT(-1))
    assert float(sqrt(APPROX(2))) == pytest.approx(2 ** 0.5)


def test_approx_comparison_is_relative():
    tight = approx_backend(1e-12)
    assert tight(1.0) == tight(1.0 + 5e-13)
    assert tight(1.0) != tight(1.0 + 5e-12)
    assert tight(1e6) == tight(1e6 + 1e-7)
    assert tight(0.0) == tight(1e-13)


def test_backends_do_not_mix():
    with pytest.raises(BackendMismatch):
        EXACT(1) + APPROX(1)
    assert EXACT(1) + 1 == 2


def test_exact_scalars_accept_strings_and_dyadic_floats():
    assert EXACT("3/4") == Fraction(3, 4)
    assert EXACT(0.5).value == Fraction(1, 2)
    assert APPROX("1/4").value == 0.25


def test_backend_validation_and_lookup():
    with pytest.raises(ValueError):
        Backend("approx", 0.0)
    with pytest.raises(ValueError):
        Backend("interval")
    assert backend_named("exact") is EXACT
    assert backend_named("approx", 1e-9).eps == 1e-9


def test_scalars_are_immutable():
    s = Scalar(1)
    with pytest.raises(AttributeError):
        s.value = 2  # type: ignore[misc]
