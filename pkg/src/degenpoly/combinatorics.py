"""Binomials, Stirling numbers, Bernoulli numbers and the classical (lambda = 0) polynomials.

The Bernoulli numbers here come from the binomial recurrence, not from
dividing t by e^t - 1, so that they can be used to check the power series
code rather than depend on it.  Convention: B_1 = -1/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import ONE, ZERO, X, MultiPoly
from .series import TruncatedSeries, exp_series, series_compose

__all__ = [
    "binomial",
    "StirlingTable",
    "stirling_table",
    "stirling1_signed",
    "stirling2",
    "bernoulli_number",
    "bernoulli_numbers",
    "falling_factorial",
    "classical_bernoulli_poly",
    "polylog_series",
    "one_minus_exp_neg",
    "polylog_one_minus_exp",
    "classical_poly_bernoulli",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class StirlingTable:
    kind: str  # "first" (signed) or "second"
    table: tuple[tuple[int, ...], ...]  # row n holds entries l = 0..n

    @property
    def n_max(self) -> int:
        return len(self.table) - 1

    def __call__(self, n: int, l: int) -> int:
        if n < 0 or l < 0 or l > n:
            return 0
        return self.table[n][l]


@lru_cache(maxsize=None)
def stirling_table(kind: str, n_max: int) -> StirlingTable:
    if kind not in ("first", "second"):
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]

        def at(l: int) -> int:
            return prev[l] if 0 <= l < len(prev) else 0

        if kind == "second":
            row = tuple(l * at(l) + at(l - 1) for l in range(n + 1))
        else:
            row = tuple(at(l - 1) - (n - 1) * at(l) for l in range(n + 1))
        rows.append(row)
    return StirlingTable(kind, tuple(rows))


def _table_for(kind: str, n: int) -> StirlingTable:
    # grow in blocks so repeated calls share one table
    size = 16
    while size < n:
        size *= 2
    return stirling_table(kind, size)


def stirling2(n: int, l: int) -> int:
    """Stirling number of the second kind; 0 when l > n or either index is negative."""
    if n < 0 or l < 0 or l > n:
        return 0
    return _table_for("second", n)(n, l)


def stirling1_signed(n: int, l: int) -> int:
    """Signed Stirling number of the first kind, (x)_n = sum_l s(n, l) x^l."""
    if n < 0 or l < 0 or l > n:
        return 0
    return _table_for("first", n)(n, l)


@lru_cache(maxsize=None)
def bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    """B_0 .. B_n_max from sum_{j=0}^{n} C(n+1, j) B_j = 0 (n >= 1)."""
    B = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = sum(comb(n + 1, j) * B[j] for j in range(n))
        B.append(-s / (n + 1))
    return tuple(B)


def bernoulli_number(n: int) -> Fraction:
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    size = 16
    while size < n:
        size *= 2
    return bernoulli_numbers(size)[n]


def falling_factorial(n: int, var: str = "x") -> MultiPoly:
    """(var)_n = var (var-1) ... (var-n+1)."""
    v = MultiPoly.var(var)
    p = ONE
    for i in range(n):
        p = p * (v - i)
    return p


@lru_cache(maxsize=None)
def classical_bernoulli_poly(n: int) -> MultiPoly:
    """B_n(x) = sum_l C(n, l) B_l x^(n-l)."""
    terms = {}
    for l in range(n + 1):
        c = comb(n, l) * bernoulli_number(l)
        if c:
            terms[(n - l, 0, 0)] = c
    return MultiPoly(terms)


def polylog_series(k: int, order: int) -> TruncatedSeries:
    """Li_k(s) = sum_{n>=1} s^n / n^k as a series in s; any integer k."""
    return TruncatedSeries(
        ZERO if n == 0 else MultiPoly.constant(Fraction(1, n) ** k) for n in range(order)
    )


def one_minus_exp_neg(order: int) -> TruncatedSeries:
    """1 - e^(-t)."""
    e = exp_series(order, -1)
    return TruncatedSeries((ZERO,) + tuple(-c for c in e.coeffs[1:]))


@lru_cache(maxsize=None)
def polylog_one_minus_exp(k: int, order: int) -> TruncatedSeries:
    """Li_k(1 - e^(-t)) by series composition."""
    return series_compose(polylog_series(k, order), one_minus_exp_neg(order))


@lru_cache(maxsize=None)
def _classical_poly_bernoulli_series(k: int, order: int) -> TruncatedSeries:
    # Li_k(1-e^-t) and e^t-1 both vanish at t=0; divide each by t first.
    num = polylog_one_minus_exp(k, order + 1).shift(1)
    e = exp_series(order + 1)
    den = TruncatedSeries((ZERO,) + e.coeffs[1:]).shift(1)
    return (num / den) * exp_series(order, X)


def classical_poly_bernoulli(k: int, n: int) -> MultiPoly:
    """B_n^(k)(x) from Li_k(1-e^(-t)) / (e^t - 1) * e^(xt)."""
    return _classical_poly_bernoulli_series(k, n + 1).coefficient(n)
