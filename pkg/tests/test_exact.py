from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenpoly.exact import (
    LAM,
    ONE,
    ZERO,
    X,
    Y,
    MultiPoly,
    RationalDivisionError,
    format_rational,
    parse_rational,
    poly_arith,
    poly_differentiate,
    poly_substitute,
    rational_arith,
)

from conftest import polys, small_rationals


def test_rational_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    z = rational_arith(Fraction(7, 3), Fraction(7, 3), "sub")
    assert (z.numerator, z.denominator) == (0, 1)
    r = Fraction(-2, 4)
    assert (r.numerator, r.denominator) == (-1, 2)


def test_rational_division_by_zero_is_a_recoverable_error():
    with pytest.raises(RationalDivisionError):
        rational_arith(1, 0, "div")
    with pytest.raises(ZeroDivisionError):
        X / 0


@pytest.mark.parametrize("text", ["3", "-1/2", "0", "22/7"])
def test_rational_format_round_trip(text):
    assert format_rational(parse_rational(text)) == text


@pytest.mark.parametrize("text", ["2/4", "1/-2", "abc", "1/0", "+3"])
def test_non_canonical_rationals_rejected(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_poly_examples():
    assert poly_arith(X + LAM, X - LAM, "mul") == X**2 - LAM**2
    assert poly_arith(X**3 + 7, ZERO, "mul").is_zero
    assert X * (X - LAM) == MultiPoly({(2, 0, 0): 1, (1, 0, 1): -1})


def test_zero_coefficients_are_never_stored():
    p = (X + 1) - X
    assert p.terms == {(0, 0, 0): Fraction(1)}
    assert MultiPoly({(1, 0, 0): 0}).terms == {}


def test_substitute_examples():
    p = X**2 - LAM * X
    assert poly_substitute(p, "lam", 0) == X**2
    assert poly_substitute(p, "x", 1) == 1 - LAM


def test_differentiate_examples():
    assert poly_differentiate(X**2 - LAM * X, "x") == 2 * X - LAM
    assert poly_differentiate(MultiPoly.constant(Fraction(3, 7)), "x").is_zero
    cubic = X * (X - LAM) * (X - 2 * LAM)
    expected = 3 * X**2 - 6 * LAM * X + 2 * LAM**2
    assert poly_differentiate(cubic, "x") == expected
    product_sum = (X - LAM) * (X - 2 * LAM) + X * (X - 2 * LAM) + X * (X - LAM)
    assert product_sum == expected


def test_compose_affine():
    p = X**2 + LAM
    q = p.compose({"x": (X + 1) / 2, "lam": LAM / 2})
    assert q == (X**2 + 2 * X + 1) / 4 + LAM / 2


def test_records_sorted_and_exact():
    p = Fraction(-1, 2) * LAM * X + 3 * Y**2 + Fraction(1, 6)
    recs = p.to_records()
    assert recs == [
        {"coeff": "1/6", "dx": 0, "dy": 0, "dl": 0},
        {"coeff": "3", "dx": 0, "dy": 2, "dl": 0},
        {"coeff": "-1/2", "dx": 1, "dy": 0, "dl": 1},
    ]
    assert MultiPoly.from_records(recs) == p


def test_unknown_variable():
    with pytest.raises(ValueError):
        MultiPoly.var("z")


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p + (-p)).is_zero
    assert p * ONE == p


@given(polys)
def test_adding_zero_keeps_term_collection(p):
    assert (p + ZERO).terms == p.terms
    assert (ZERO + p).terms == p.terms


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.sampled_from(["x", "y", "lam"]), small_rationals)
def test_substitution_is_a_ring_homomorphism(p, q, var, value):
    assert (p * q).substitute(var, value) == p.substitute(var, value) * q.substitute(var, value)
    assert (p + q).substitute(var, value) == p.substitute(var, value) + q.substitute(var, value)


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.sampled_from(["x", "y", "lam"]))
def test_leibniz_rule(p, q, var):
    assert (p * q).diff(var) == p.diff(var) * q + p * q.diff(var)


@given(polys)
def test_records_round_trip(p):
    assert MultiPoly.from_records(p.to_records()).terms == p.terms
    assert MultiPoly.from_records(p.to_records()).to_records() == p.to_records()
