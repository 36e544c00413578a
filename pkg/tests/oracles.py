"""Independent reference computations used only by the tests."""
from fractions import Fraction
from functools import lru_cache
from math import comb

import sympy


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def stirling2_by_enumeration(n, l):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == l)


@lru_cache(maxsize=None)
def bernoulli_poly_by_recurrence(n):
    """B_n(x) from sum_{j<n} C(n,j) B_j(x) = n x^(n-1), as a sympy polynomial."""
    x = sympy.Symbol("x")
    if n == 0:
        return sympy.Integer(1)
    # built from B_n' = n B_{n-1} and int_0^1 B_n = 0, then checked against the recurrence
    anti = sympy.integrate(n * bernoulli_poly_by_recurrence(n - 1), x)
    const = -sympy.integrate(anti, (x, 0, 1))
    p = sympy.expand(anti + const)
    # confirm the stated recurrence on the way up
    lhs = sum(comb(n, j) * bernoulli_poly_by_recurrence(j) for j in range(n)) if n > 1 else 1
    assert n == 1 or sympy.expand(lhs - n * x ** (n - 1)) == 0
    return p


def sympy_to_terms(expr):
    """sympy polynomial in x, y, lam -> {(dx, dy, dl): Fraction}."""
    x, y, lam = sympy.symbols("x y lam")
    poly = sympy.Poly(sympy.expand(expr), x, y, lam)
    out = {}
    for (a, b, c), coeff in poly.terms():
        q = sympy.Rational(coeff)
        out[(a, b, c)] = Fraction(int(q.p), int(q.q))
    return out


def sympy_egf_coefficients(expr, order):
    """n! [t^n] of a sympy expression in t, for n < order."""
    t = sympy.Symbol("t")
    s = sympy.series(expr, t, 0, order).removeO()
    return [sympy.expand(s.coeff(t, n) * sympy.factorial(n)) for n in range(order)]
