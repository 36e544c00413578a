"""Truncated formal power series in t with MultiPoly coefficients.

A :class:`TruncatedSeries` of order N stores the coefficients of
t^0 .. t^(N-1).  Binary operations return a series whose order is the smaller
of the two operand orders, so a result never claims more precision than its
inputs.

Multiplication is the schoolbook Cauchy product and division uses the usual
coefficient recurrence.  At the orders used here (N below ~64) the cost is
dominated by the exact coefficient arithmetic, so this is the place to swap
in a faster product if larger tables are ever needed.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .exact import ONE, ZERO, MultiPoly

__all__ = [
    "SeriesError",
    "TruncatedSeries",
    "series_mul",
    "series_div",
    "series_compose",
    "series_coefficient",
    "exp_series",
    "log1p_series",
]


class SeriesError(ValueError):
    """Invalid series operation (non-unit divisor, bad composition, index out of range)."""


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        self._coeffs = tuple(MultiPoly.coerce(c) for c in coeffs)

    @classmethod
    def from_function(cls, order: int, f: Callable[[int], object]) -> "TruncatedSeries":
        return cls(f(n) for n in range(order))

    @classmethod
    def from_egf(cls, values: Sequence) -> "TruncatedSeries":
        """Series whose n!-scaled coefficients are ``values``."""
        return cls(MultiPoly.coerce(v) * Fraction(1, factorial(n)) for n, v in enumerate(values))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c] + [ZERO] * (order - 1))

    @classmethod
    def monomial(cls, power: int, order: int, c=1) -> "TruncatedSeries":
        """The series c*t^power."""
        return cls(c if n == power else ZERO for n in range(order))

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> MultiPoly:
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[:order])

    def map(self, f: Callable[[MultiPoly], MultiPoly]) -> "TruncatedSeries":
        return TruncatedSeries(f(c) for c in self._coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(self._coeffs[i] + other._coeffs[i] for i in range(n))

    def __neg__(self) -> "TruncatedSeries":
        return self.map(lambda c: -c)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.map(lambda c: c * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        return self.map(lambda c: c / other)

    def shift(self, m: int) -> "TruncatedSeries":
        """Divide by t^m.  The first m coefficients must be exactly zero."""
        if m < 0 or m > self.order:
            raise SeriesError(f"cannot shift a series of order {self.order} by {m}")
        for i in range(m):
            if self._coeffs[i]:
                raise SeriesError(
                    f"cannot divide by t^{m}: coefficient of t^{i} is {self._coeffs[i]}, not 0"
                )
        return TruncatedSeries(self._coeffs[m:])

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return series_compose(self, inner)

    def coefficient(self, n: int, egf: bool = True) -> MultiPoly:
        return series_coefficient(self, n, egf=egf)

    def egf_values(self) -> list[MultiPoly]:
        return [c * factorial(n) for n, c in enumerate(self._coeffs)]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        s = ZERO
        for i in range(k + 1):
            x, y = ac[i], bc[k - i]
            if x and y:
                s = s + x * y
        out.append(s)
    return TruncatedSeries(out)


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """num / den, requiring den to start with a nonzero rational constant."""
    n = min(num.order, den.order)
    if n == 0:
        return TruncatedSeries(())
    d0 = den[0]
    if not d0 or not d0.is_constant:
        raise SeriesError(
            f"denominator constant term {d0} is not an invertible rational; shift first"
        )
    inv = 1 / d0.constant_term
    dc = den.coeffs
    out: list[MultiPoly] = []
    for k in range(n):
        s = num[k]
        for j in range(1, k + 1):
            if dc[j] and out[k - j]:
                s = s - dc[j] * out[k - j]
        out.append(s * inv)
    return TruncatedSeries(out)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(t)); inner must have zero constant term."""
    if inner.order and inner[0]:
        raise SeriesError(f"inner series has nonzero constant term {inner[0]}")
    n = min(outer.order, inner.order)
    if n == 0:
        return TruncatedSeries(())
    inner = inner.truncate(n)
    # Horner: f_0 + g*(f_1 + g*(f_2 + ...))
    acc = TruncatedSeries.constant(outer[n - 1], n)
    for j in range(n - 2, -1, -1):
        acc = series_mul(acc, inner)
        acc = TruncatedSeries((acc[0] + outer[j],) + acc.coeffs[1:])
    return acc


def series_coefficient(s: TruncatedSeries, n: int, egf: bool = True) -> MultiPoly:
    """n!*[t^n] when ``egf`` is true, plain [t^n] otherwise."""
    if not 0 <= n < s.order:
        raise SeriesError(f"coefficient t^{n} is outside a series of order {s.order}")
    c = s[n]
    return c * factorial(n) if egf else c


def exp_series(order: int, scale=ONE) -> TruncatedSeries:
    """e^(scale*t)."""
    scale = MultiPoly.coerce(scale)
    out, p = [], ONE
    for n in range(order):
        out.append(p * Fraction(1, factorial(n)))
        p = p * scale
    return TruncatedSeries(out)


def log1p_series(order: int) -> TruncatedSeries:
    """log(1+t)."""
    return TruncatedSeries(
        ZERO if n == 0 else MultiPoly.constant(Fraction((-1) ** (n + 1), n)) for n in range(order)
    )
