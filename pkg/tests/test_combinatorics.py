from fractions import Fraction

import pytest
import sympy

from degenpoly.combinatorics import (
    bernoulli_number,
    classical_bernoulli_poly,
    classical_poly_bernoulli,
    falling_factorial,
    stirling1_signed,
    stirling2,
    stirling_table,
)
from degenpoly.exact import X, ZERO, MultiPoly
from degenpoly.series import TruncatedSeries, exp_series

from oracles import bernoulli_poly_by_recurrence, stirling2_by_enumeration, sympy_to_terms


def test_stirling2_examples():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(3, 5) == 0


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling2_matches_enumeration(n):
    for l in range(n + 1):
        assert stirling2(n, l) == stirling2_by_enumeration(n, l)


def test_stirling1_examples():
    assert stirling1_signed(3, 1) == 2
    assert [stirling1_signed(3, l) for l in range(4)] == [0, 2, -3, 1]
    assert all(stirling1_signed(n, n) == 1 for n in range(10))


def test_table_invariants():
    for kind in ("first", "second"):
        t = stirling_table(kind, 15)
        assert all(t(n, n) == 1 for n in range(16))
        assert all(t(n, 0) == 0 for n in range(1, 16))
    assert all(v >= 0 for row in stirling_table("second", 15).table for v in row)


@pytest.mark.parametrize("n", range(0, 13))
def test_powers_and_falling_factorials(n):
    powers = sum((falling_factorial(l) * stirling2(n, l) for l in range(n + 1)), ZERO)
    assert powers == X**n
    falling = sum((X**l * stirling1_signed(n, l) for l in range(n + 1)), ZERO)
    assert falling == falling_factorial(n)


def test_stirling_inversion():
    for n in range(16):
        for m in range(16):
            s = sum(stirling1_signed(n, l) * stirling2(l, m) for l in range(16))
            assert s == (1 if n == m else 0)


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(3) == 0
    assert all(bernoulli_number(n) == 0 for n in range(3, 40, 2))
    for n in range(30):
        expected = sympy.bernoulli(n) if n != 1 else sympy.Rational(-1, 2)
        assert bernoulli_number(n) == Fraction(int(expected.p), int(expected.q))


def test_bernoulli_numbers_match_series_division():
    order = 21
    em1 = (exp_series(order + 1) - TruncatedSeries.constant(1, order + 1)).shift(1)
    q = TruncatedSeries.constant(1, order) / em1
    assert q.egf_values() == [bernoulli_number(n) for n in range(order)]


def test_classical_bernoulli_poly_examples():
    assert classical_bernoulli_poly(0) == 1
    assert classical_bernoulli_poly(1) == X - Fraction(1, 2)
    assert classical_bernoulli_poly(2) == X**2 - X + Fraction(1, 6)


@pytest.mark.parametrize("n", range(0, 11))
def test_classical_bernoulli_poly_matches_recurrence(n):
    assert classical_bernoulli_poly(n) == MultiPoly(sympy_to_terms(bernoulli_poly_by_recurrence(n)))


@pytest.mark.parametrize("n", range(1, 16))
def test_bernoulli_poly_forward_difference(n):
    b = classical_bernoulli_poly(n)
    assert b.compose({"x": X + 1}) - b == n * X ** (n - 1)


@pytest.mark.parametrize("n", range(0, 11))
def test_poly_bernoulli_k1_is_bernoulli(n):
    assert classical_poly_bernoulli(1, n) == classical_bernoulli_poly(n)


@pytest.mark.parametrize("k", range(-3, 4))
def test_poly_bernoulli_constant_term(k):
    assert classical_poly_bernoulli(k, 0) == 1


def test_poly_bernoulli_k2_against_sympy():
    t, x = sympy.symbols("t x")
    li2 = sum((1 - sympy.exp(-t)) ** m / m**2 for m in range(1, 7))
    s = sympy.series(li2 / (sympy.exp(t) - 1) * sympy.exp(x * t), t, 0, 5).removeO()
    for n in range(5):
        expected = sympy.expand(s.coeff(t, n) * sympy.factorial(n))
        assert classical_poly_bernoulli(2, n) == MultiPoly(sympy_to_terms(expected))
    # Theorem 1 at lambda = 0: B_1^(2)(x) = B_1(x) + B_1/2
    assert classical_poly_bernoulli(2, 1) == X - Fraction(3, 4)
