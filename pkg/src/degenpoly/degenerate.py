"""Degenerate falling factorials, Carlitz degenerate Bernoulli polynomials and
degenerate poly-Bernoulli polynomials, all as exact polynomials in x and lambda.

lambda is kept as a formal variable throughout.  Setting it to zero is then an
ordinary substitution and recovers the classical polynomials.

The generating function of beta_n^(k)(x|lambda) is

    Li_k(1 - e^-t) / ((1 + lam t)^(1/lam) - 1) * (1 + lam t)^(x/lam)

Both Li_k(1 - e^-t) and (1 + lam t)^(1/lam) - 1 vanish at t = 0 (the second
because (1|lam)_0 = 1 cancels the -1), and both have linear coefficient 1.
The quotient is therefore evaluated as

    [t / ((1 + lam t)^(1/lam) - 1)] * [Li_k(1 - e^-t) / t] * (1 + lam t)^(x/lam)

where each bracket is obtained by an explicit shift by t and the first has a
unit constant term, so the division is well defined.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .combinatorics import polylog_one_minus_exp, stirling2
from .exact import LAM, ONE, ZERO, X, MultiPoly, as_rational, format_rational
from .series import TruncatedSeries

__all__ = [
    "degenerate_falling",
    "degenerate_exp",
    "DegenerateSeriesBundle",
    "build_bundle",
    "polylog_factor_coeff",
    "generating_series",
    "SequenceTable",
    "poly_bernoulli_table",
    "degenerate_bernoulli",
    "degenerate_poly_bernoulli",
]

GENERATOR_VERSION = "0.1.0"


@lru_cache(maxsize=None)
def _falling_of(a: MultiPoly, n: int) -> MultiPoly:
    if n == 0:
        return ONE
    return _falling_of(a, n - 1) * (a - LAM * (n - 1))


def degenerate_falling(var="x", n: int = 0) -> MultiPoly:
    """(a|lam)_n = a (a - lam) ... (a - (n-1) lam).

    ``var`` is a variable name or any polynomial ``a``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = MultiPoly.var(var) if isinstance(var, str) else MultiPoly.coerce(var)
    return _falling_of(a, n)


@lru_cache(maxsize=None)
def degenerate_exp(a: MultiPoly, order: int) -> TruncatedSeries:
    """(1 + lam t)^(a/lam) = sum_n (a|lam)_n t^n / n!."""
    return TruncatedSeries(
        _falling_of(a, n) * Fraction(1, factorial(n)) for n in range(order)
    )


def polylog_factor_coeff(k: int, l: int) -> Fraction:
    """l! [t^l] of Li_k(1 - e^-t)/t, from the Stirling-number closed form."""
    total = Fraction(0)
    for p in range(1, l + 2):
        sign = -1 if (p + l + 1) % 2 else 1
        total += sign * Fraction(factorial(p)) * Fraction(1, p) ** k * stirling2(l + 1, p)
    return total / (l + 1)


@dataclass(frozen=True)
class DegenerateSeriesBundle:
    """The series shared by every table of a given truncation order."""

    order: int
    e_lambda: TruncatedSeries
    carlitz_kernel: TruncatedSeries

    def polylog_factor(self, k: int, method: str = "composition") -> TruncatedSeries:
        """Li_k(1 - e^-t)/t, either by composition or from the closed form."""
        if method == "composition":
            return polylog_one_minus_exp(k, self.order + 1).shift(1)
        if method == "closed":
            return TruncatedSeries.from_egf([polylog_factor_coeff(k, l) for l in range(self.order)])
        raise ValueError(f"unknown polylog factor method {method!r}")


@lru_cache(maxsize=None)
def build_bundle(order: int) -> DegenerateSeriesBundle:
    if order < 1:
        raise ValueError("series order must be at least 1")
    e_lam = degenerate_exp(ONE, order + 1)
    # (1|lam)_0 = 1, so e_lam - 1 has zero constant term and shift(1) is exact
    den = TruncatedSeries((ZERO,) + e_lam.coeffs[1:]).shift(1)
    kernel = TruncatedSeries.constant(ONE, order) / den
    return DegenerateSeriesBundle(order, e_lam.truncate(order), kernel)


@lru_cache(maxsize=None)
def _base_series(k: int, order: int) -> TruncatedSeries:
    b = build_bundle(order)
    return b.carlitz_kernel * b.polylog_factor(k)


def generating_series(k: int, order: int, factors: Iterable[MultiPoly] = (X,)) -> TruncatedSeries:
    """Li_k(1-e^-t)/((1+lam t)^(1/lam)-1) times prod_a (1+lam t)^(a/lam).

    ``factors=(X,)`` gives the defining series of beta_n^(k)(x|lam); an empty
    tuple gives the numbers beta_n^(k)(lam).
    """
    s = _base_series(k, order)
    for a in factors:
        s = s * degenerate_exp(MultiPoly.coerce(a), order)
    return s


@dataclass(frozen=True)
class SequenceTable:
    """beta_0^(k) .. beta_N^(k) as polynomials, with provenance."""

    k: int
    entries: tuple[MultiPoly, ...]
    meta: Mapping = field(default_factory=dict, compare=False)
    evaluation: Mapping[str, str] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.entries)

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, n: int) -> MultiPoly:
        return self.entries[n]

    def map(self, f) -> "SequenceTable":
        return SequenceTable(self.k, tuple(f(e) for e in self.entries), self.meta, self.evaluation)

    def evaluate(self, values: Mapping[str, object]) -> "SequenceTable":
        """Substitute rational values for variables in every entry."""
        table = self
        for var, value in values.items():
            table = table.map(lambda e: e.substitute(var, value))
        done = dict(self.evaluation)
        done.update({var: format_rational(as_rational(v)) for var, v in values.items()})
        return SequenceTable(self.k, table.entries, self.meta, done)

    def to_dict(self, include_meta: bool = False) -> dict:
        d = {
            "k": self.k,
            "order": self.order,
            "entries": [e.to_records() for e in self.entries],
        }
        if self.evaluation:
            d["eval"] = dict(self.evaluation)
        if include_meta and self.meta:
            d["meta"] = dict(self.meta)
        return d

    def to_json(self, include_meta: bool = False) -> str:
        return json.dumps(self.to_dict(include_meta), indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: Mapping) -> "SequenceTable":
        entries = tuple(MultiPoly.from_records(r) for r in d["entries"])
        if len(entries) != d["order"]:
            raise ValueError("table order does not match the number of entries")
        return cls(int(d["k"]), entries, dict(d.get("meta", {})), dict(d.get("eval", {})))

    @classmethod
    def from_json(cls, text: str) -> "SequenceTable":
        return cls.from_dict(json.loads(text))


@lru_cache(maxsize=None)
def poly_bernoulli_table(k: int, n_max: int, with_x: bool = True) -> SequenceTable:
    order = n_max + 1
    s = generating_series(k, order, (X,) if with_x else ())
    meta = {
        "truncation_order": order,
        "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "generator_version": GENERATOR_VERSION,
    }
    return SequenceTable(k, tuple(s.egf_values()), meta)


def degenerate_poly_bernoulli(k: int, n: int, with_x: bool = True) -> MultiPoly:
    """beta_n^(k)(x|lam), or the number beta_n^(k)(lam) when ``with_x`` is false."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return poly_bernoulli_table(k, n, with_x).entries[n]


def degenerate_bernoulli(n: int, with_x: bool = True) -> MultiPoly:
    """Carlitz beta_n(x|lam) from t/((1+lam t)^(1/lam)-1) (1+lam t)^(x/lam)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _carlitz_table(n, with_x)[n]


@lru_cache(maxsize=None)
def _carlitz_table(n_max: int, with_x: bool) -> tuple[MultiPoly, ...]:
    order = n_max + 1
    s = build_bundle(order).carlitz_kernel
    if with_x:
        s = s * degenerate_exp(X, order)
    return tuple(s.egf_values())
