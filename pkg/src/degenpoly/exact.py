"""Exact scalars and sparse polynomials in the fixed variables x, y, lambda.

Scalars are :class:`fractions.Fraction` values, which are always stored
reduced with a positive denominator.  Polynomials are :class:`MultiPoly`
values: an immutable mapping from exponent triples ``(deg_x, deg_y, deg_lam)``
to nonzero Fraction coefficients.  Because the stored form is canonical,
``p == q`` is a structural comparison and is what every identity check in
this package ultimately reduces to.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Union

__all__ = [
    "VARIABLES",
    "RationalDivisionError",
    "MultiPoly",
    "ONE",
    "ZERO",
    "X",
    "Y",
    "LAM",
    "var_index",
    "as_rational",
    "format_rational",
    "parse_rational",
    "rational_arith",
    "poly_arith",
    "poly_substitute",
    "poly_differentiate",
]

VARIABLES = ("x", "y", "lam")
_ALIASES = {
    "x": 0,
    "y": 1,
    "lam": 2,
    "lambda": 2,
    "λ": 2,
    "l": 2,
}

Exponent = tuple  # (deg_x, deg_y, deg_lam)
Scalar = Union[int, Fraction]


class RationalDivisionError(ZeroDivisionError):
    """Raised when an exact division has a zero divisor."""


def var_index(name: str) -> int:
    """Position of a variable name in the exponent triple."""
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of x, y, lam") from None


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(as_rational(q))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`.

    Only canonical spellings are accepted so that serialization round-trips
    byte for byte.
    """
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None
    if str(value) != text.strip():
        raise ValueError(f"rational literal {text!r} is not in canonical p/q form")
    return value


_RATIONAL_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(a, b, op: str) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op == "div" and b == 0:
        raise RationalDivisionError(f"division of {a} by zero")
    try:
        return _RATIONAL_OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown rational op {op!r}") from None


class MultiPoly:
    """Immutable polynomial in x, y, lambda with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or min(exp) < 0:
                raise ValueError(f"bad exponent triple {exp!r}")
            c = as_rational(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        # trusted constructor: keys are triples, values nonzero Fractions
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        c = as_rational(c)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        exp = [0, 0, 0]
        exp[var_index(name)] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(value)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def coefficient(self, dx: int = 0, dy: int = 0, dl: int = 0) -> Fraction:
        return self._terms.get((dx, dy, dl), Fraction(0))

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = var_index(var)
        return max((e[i] for e in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def free_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(VARIABLES) if any(e[i] for e in self._terms))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.constant(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = as_rational(other)
            except TypeError:
                return NotImplemented
            if not c:
                return ZERO
            return MultiPoly._raw({e: v * c for e, v in self._terms.items()})
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, Fraction] = {}
        get = out.get
        for (bx, by, bl), bc in b.items():
            for (ax, ay, al), ac in a.items():
                key = (ax + bx, ay + by, al + bl)
                out[key] = get(key, 0) + ac * bc
        return MultiPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational scalar only."""
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        if not c:
            raise RationalDivisionError("polynomial divided by zero")
        return self * (1 / c)

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        try:
            return self._terms == MultiPoly.constant(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def substitute(self, var: str, value: Scalar) -> "MultiPoly":
        """Replace one variable by a rational number."""
        i = var_index(var)
        value = as_rational(value)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            k = e[i]
            if k and not value:
                continue
            key = e[:i] + (0,) + e[i + 1:]
            out[key] = out.get(key, 0) + c * value**k
        return MultiPoly._raw({e: c for e, c in out.items() if c})

    def compose(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials."""
        repl = [None, None, None]
        for name, value in mapping.items():
            repl[var_index(name)] = MultiPoly.coerce(value)
        base = [r if r is not None else MultiPoly.var(VARIABLES[i]) for i, r in enumerate(repl)]
        powers: list[dict[int, MultiPoly]] = [{0: ONE}, {0: ONE}, {0: ONE}]

        def power(i: int, k: int) -> MultiPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * base[i]
            return cache[k]

        result = ZERO
        for (ex, ey, el), c in self._terms.items():
            result = result + power(0, ex) * power(1, ey) * power(2, el) * c
        return result

    def diff(self, var: str) -> "MultiPoly":
        i = var_index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly._raw(out)

    # -- serialization ----------------------------------------------------

    def to_records(self) -> list[dict]:
        return [
            {"coeff": format_rational(c), "dx": e[0], "dy": e[1], "dl": e[2]}
            for e, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "MultiPoly":
        out: dict[Exponent, Fraction] = {}
        for r in records:
            key = (int(r["dx"]), int(r["dy"]), int(r["dl"]))
            if key in out:
                raise ValueError(f"duplicate exponent {key} in polynomial records")
            c = parse_rational(r["coeff"])
            if not c:
                raise ValueError("zero coefficient in canonical polynomial records")
            out[key] = c
        return cls(out)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = ("x", "y", "lam")
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), [-v for v in t[0]])):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = MultiPoly._raw({})
ONE = MultiPoly._raw({(0, 0, 0): Fraction(1)})
X = MultiPoly.var("x")
Y = MultiPoly.var("y")
LAM = MultiPoly.var("lam")


_POLY_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    try:
        f = _POLY_OPS[op]
    except KeyError:
        raise ValueError(f"unknown polynomial op {op!r}") from None
    return f(MultiPoly.coerce(p), MultiPoly.coerce(q))


def poly_substitute(p: MultiPoly, var: str, value) -> MultiPoly:
    return p.substitute(var, value)


def poly_differentiate(p: MultiPoly, var: str) -> MultiPoly:
    return p.diff(var)
