from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import CoefficientOverflowError, LaurentSyntaxError, NonUnitError, PreconditionError
from src.rings.laurent import (
    INT64_MAX,
    ONE,
    ZERO,
    LaurentPoly,
    X,
    Y,
    evaluate,
    format_laurent,
    geometric_column,
    inverse_unit,
    is_unit,
    monomial,
    parse_laurent,
    poly_sum,
    shift,
    substitute_monomials,
)
from strategies import laurent_polys, units

P_R1 = 1 - 2 * (X - 1) * Y ** -1
P_R2 = -((X - 1) ** 2) * Y ** -1


def test_monomial_examples():
    assert monomial(0, 0, 1) == ONE
    assert monomial(0, -1, 1) == Y ** -1
    assert monomial(1, 0, -2) == -2 * X
    assert monomial(3, 3, 0) == ZERO


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({(0, 0): 0, (1, 0): 2})
    assert len(p) == 1
    assert p - 2 * X == ZERO
    assert (X + 1) - X == 1


def test_units():
    assert is_unit(-(X ** 2) * Y ** -3)
    assert not is_unit(2 * X)
    assert not is_unit(X + Y)
    assert not is_unit(ZERO)
    assert inverse_unit(-X * Y ** 2) == -(X ** -1) * Y ** -2
    with pytest.raises(NonUnitError):
        inverse_unit(1 + X)
    with pytest.raises(NonUnitError):
        (X + 1) ** -1


def test_format_r1_invariant():
    assert format_laurent(P_R1) == "2*Y^-1 - 2*X*Y^-1 + 1"
    assert format_laurent(ZERO) == "0"
    assert format_laurent(-ONE) == "-1"
    assert str(X ** 2 * Y ** -1) == "X^2*Y^-1"


def test_parse_displayed_forms():
    assert parse_laurent("1 - 2*(X-1)*Y^-1") == P_R1
    assert parse_laurent("-(X-1)^2*Y^-1") == P_R2
    assert parse_laurent("0") == ZERO
    assert parse_laurent("X**-2") == X ** -2


@pytest.mark.parametrize("text", ["X/2", "Z + 1", "X^(1/2)", "1 +", "sin(X)"])
def test_parse_rejects_non_laurent(text):
    with pytest.raises(LaurentSyntaxError):
        parse_laurent(text)


def test_overflow_is_reported():
    big = monomial(0, 0, INT64_MAX)
    with pytest.raises(CoefficientOverflowError):
        big + 1
    with pytest.raises(CoefficientOverflowError):
        big * 2
    with pytest.raises(CoefficientOverflowError):
        LaurentPoly({(0, 0): 2**64})


def test_evaluate():
    assert evaluate(P_R1, 1, 1) == 1
    assert evaluate(P_R2, 2, 1) == -1
    assert evaluate(Y ** -1, 1, Fraction(1, 3)) == 3
    with pytest.raises(PreconditionError):
        evaluate(X, 0, 1)


@pytest.mark.parametrize("k", range(-20, 21))
def test_geometric_column_identity(k):
    assert (X - 1) * geometric_column(k) == X ** k - 1


def test_shift_and_sum():
    assert shift(P_R1, 1, 1) == X * Y * P_R1
    assert poly_sum([X, Y, -X]) == Y
    assert poly_sum([]) == ZERO


def test_substitute_monomials_swaps_variables():
    assert substitute_monomials(X + 2 * Y ** -1, (0, 1), (1, 0)) == Y + 2 * X ** -1


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p
    assert p - p == ZERO


@given(units(), laurent_polys())
def test_units_are_invertible(u, p):
    assert u * inverse_unit(u) == ONE
    assert is_unit(u ** -3)
    assert inverse_unit(u) * (u * p) == p


@given(laurent_polys(), st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(p, a, b):
    x0 = Fraction(a or 1, 2)
    y0 = Fraction(3, b or 1)
    assert evaluate(p * p + X, x0, y0) == evaluate(p, x0, y0) ** 2 + x0


@given(laurent_polys())
def test_format_parse_round_trip(p):
    assert parse_laurent(format_laurent(p)) == p
