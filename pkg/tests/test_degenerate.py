from fractions import Fraction
from math import comb

import pytest
import sympy

from degenpoly.combinatorics import classical_bernoulli_poly, classical_poly_bernoulli, falling_factorial
from degenpoly.degenerate import (
    SequenceTable,
    build_bundle,
    degenerate_bernoulli,
    degenerate_falling,
    degenerate_poly_bernoulli,
    poly_bernoulli_table,
    polylog_factor_coeff,
)
from degenpoly.exact import LAM, X, ZERO, MultiPoly
from degenpoly.series import TruncatedSeries

from oracles import sympy_egf_coefficients, sympy_to_terms

t, x, lam = sympy.symbols("t x lam")


def test_degenerate_falling():
    assert degenerate_falling("x", 0) == 1
    assert degenerate_falling("x", 2) == X**2 - LAM * X
    for n in range(8):
        assert degenerate_falling("x", n).substitute("lam", 1) == falling_factorial(n)
        assert degenerate_falling("x", n).substitute("lam", 0) == X**n


def test_bundle_invariants():
    b = build_bundle(6)
    assert b.e_lambda[0] == 1 and b.e_lambda[1] == 1
    assert b.polylog_factor(1) == TruncatedSeries.constant(1, 6)
    with pytest.raises(ValueError):
        build_bundle(0)


def test_carlitz_kernel_against_sympy():
    kernel = t / ((1 + lam * t) ** (1 / lam) - 1)
    expected = sympy_egf_coefficients(kernel, 4)
    got = build_bundle(4).carlitz_kernel.egf_values()
    for e, g in zip(expected, got):
        assert g == MultiPoly(sympy_to_terms(sympy.simplify(e)))
    assert got[1] == (LAM - 1) / 2
    assert got[2] == (1 - LAM**2) / 6


def test_degenerate_bernoulli_against_sympy():
    gf = t / ((1 + lam * t) ** (1 / lam) - 1) * (1 + lam * t) ** (x / lam)
    expected = sympy_egf_coefficients(gf, 4)
    for n, e in enumerate(expected):
        assert degenerate_bernoulli(n) == MultiPoly(sympy_to_terms(sympy.simplify(e)))


def test_degenerate_bernoulli_examples():
    assert degenerate_bernoulli(0) == 1
    assert degenerate_bernoulli(1) == X + (LAM - 1) / 2
    assert degenerate_bernoulli(1, with_x=False) == (LAM - 1) / 2


@pytest.mark.parametrize("n", range(0, 13))
def test_lambda_zero_gives_bernoulli_polynomials(n):
    assert degenerate_bernoulli(n).substitute("lam", 0) == classical_bernoulli_poly(n)


@pytest.mark.parametrize("n", range(0, 13))
def test_eq2_expansion(n):
    rhs = sum(
        (comb(n, l) * degenerate_bernoulli(l, False) * degenerate_falling("x", n - l) for l in range(n + 1)),
        ZERO,
    )
    assert degenerate_bernoulli(n) == rhs


def test_polylog_factor_coeff_examples():
    assert polylog_factor_coeff(1, 0) == 1
    assert all(polylog_factor_coeff(1, l) == 0 for l in range(1, 20))
    assert all(polylog_factor_coeff(k, 0) == 1 for k in range(-5, 6))
    assert polylog_factor_coeff(2, 1) == Fraction(-1, 4)
    assert build_bundle(3).polylog_factor(2).egf_values()[1] == Fraction(-1, 4)


@pytest.mark.parametrize("k", range(-3, 4))
def test_polylog_factor_two_routes_agree(k):
    b = build_bundle(24)
    assert b.polylog_factor(k, "composition") == b.polylog_factor(k, "closed")


def test_poly_bernoulli_examples():
    assert degenerate_poly_bernoulli(2, 1, with_x=False) == (2 * LAM - 3) / 4
    for k in range(-3, 4):
        assert degenerate_poly_bernoulli(k, 0) == 1


def test_poly_bernoulli_against_sympy():
    li2 = sum((1 - sympy.exp(-t)) ** m / m**2 for m in range(1, 5))
    gf = li2 / ((1 + lam * t) ** (1 / lam) - 1) * (1 + lam * t) ** (x / lam)
    expected = sympy_egf_coefficients(gf, 3)
    for n, e in enumerate(expected):
        assert degenerate_poly_bernoulli(2, n) == MultiPoly(sympy_to_terms(sympy.simplify(e)))


@pytest.mark.parametrize("n", range(0, 21))
def test_k1_collapse(n):
    assert degenerate_poly_bernoulli(1, n) == degenerate_bernoulli(n)


@pytest.mark.parametrize("k", range(-2, 4))
def test_lambda_zero_gives_poly_bernoulli(k):
    for n in range(11):
        assert degenerate_poly_bernoulli(k, n).substitute("lam", 0) == classical_poly_bernoulli(k, n)


@pytest.mark.parametrize("k", range(-3, 4))
def test_eq12_and_degree_bounds(k):
    table = poly_bernoulli_table(k, 12)
    numbers = poly_bernoulli_table(k, 12, with_x=False)
    assert table[0] == 1
    for n, entry in enumerate(table.entries):
        rhs = sum(
            (comb(n, l) * numbers[l] * degenerate_falling("x", n - l) for l in range(n + 1)),
            ZERO,
        )
        assert entry == rhs
        assert entry.degree("x") <= n and entry.degree("lam") <= n
        assert entry.substitute("x", 0) == numbers[n]
        assert "y" not in entry.free_variables()


def test_observed_leading_coefficient_is_one():
    # not claimed anywhere, recorded for the docs
    for k in (-2, 0, 2, 3):
        for n in range(9):
            assert degenerate_poly_bernoulli(k, n).coefficient(dx=n) == 1


def test_truncation_order_does_not_change_entries():
    big = poly_bernoulli_table(3, 12)
    small = poly_bernoulli_table(3, 5)
    assert big.entries[:6] == small.entries


def test_table_serialization_round_trip():
    table = poly_bernoulli_table(-1, 5)
    text = table.to_json()
    again = SequenceTable.from_json(text)
    assert again == table
    assert again.to_json() == text
    assert '"generated"' not in text
    assert '"generated"' in table.to_json(include_meta=True)


def test_evaluated_table_round_trip():
    table = poly_bernoulli_table(2, 4).evaluate({"lam": Fraction(1, 3)})
    assert table.evaluation == {"lam": "1/3"}
    assert SequenceTable.from_json(table.to_json()).to_json() == table.to_json()
