"""Right-hand sides of the degenerate poly-Bernoulli identities, checked
against the generating function.

Every left-hand side is read off a generating series built in
:mod:`degenpoly.degenerate`; no identity is checked against another
identity.  Two of the printed formulas (the forward difference and the
distribution formula over a modulus d) admit more than one reading, so each
reading is implemented as a named variant and :func:`adjudicate` decides
between them on a parameter grid.

The finite-difference left side beta_n^(k)(x+1|lam) - beta_n^(k)(x|lam) is
taken from the series with the extra factor (1 + lam t)^(1/lam).  That is
the same polynomial as substituting x -> x+1, which the tests confirm, but
the series route does not depend on the polynomial being expressed in any
particular basis.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Sequence

from .combinatorics import bernoulli_number, binomial, stirling2
from .degenerate import (
    degenerate_bernoulli,
    degenerate_falling,
    degenerate_poly_bernoulli,
    generating_series,
    polylog_factor_coeff,
)
from .exact import LAM, ONE, ZERO, X, Y, MultiPoly

__all__ = [
    "IDENTITIES",
    "VARIANTS",
    "DEFAULT_GRID",
    "IdentityCase",
    "CaseResult",
    "VerificationReport",
    "Adjudication",
    "Verification",
    "shifted_binomial",
    "rhs_eq2",
    "rhs_eq12",
    "rhs_theorem1",
    "rhs_theorem2",
    "rhs_theorem3",
    "rhs_theorem4",
    "rhs_theorem5",
    "rhs_remark",
    "lhs_of",
    "evaluate_case",
    "build_suite",
    "run_verification",
    "adjudicate",
    "verify",
]

Binom = Callable[[int, int], int]

IDENTITIES = ("EQ2", "EQ12", "T1a", "T1b", "T2", "T3", "T4", "T5", "REMARK")
VARIANTS = {"T3": ("from-eq18", "as-printed"), "T4": ("a-index", "as-printed")}

# (n range, k range, d range) per identity; these are the acceptance grids
DEFAULT_GRID = {
    "EQ2": (range(0, 13), None, None),
    "EQ12": (range(0, 13), range(-3, 4), None),
    "T1a": (range(0, 13), None, None),
    "T1b": (range(0, 13), None, None),
    "T2": (range(0, 13), range(-3, 4), None),
    "T3": (range(1, 13), range(-2, 4), None),
    "T4": (range(0, 9), range(-2, 4), range(1, 4)),
    "T5": (range(0, 11), range(-2, 4), None),
    "REMARK": (range(0, 11), range(1, 4), None),
}


def shifted_binomial(n: int, l: int) -> int:
    """C(n, l+1): the seeded off-by-one used by the negative controls."""
    return binomial(n, l + 1)


# -- right-hand sides ---------------------------------------------------------


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def rhs_eq2(n: int, binom: Binom = binomial) -> MultiPoly:
    """sum_l C(n,l) beta_l(lam) (x|lam)_{n-l}."""
    total = ZERO
    for l in range(n + 1):
        total = total + degenerate_bernoulli(l, with_x=False) * degenerate_falling("x", n - l) * binom(n, l)
    return total


def rhs_eq12(k: int, n: int, binom: Binom = binomial) -> MultiPoly:
    """sum_l C(n,l) beta_l^(k)(lam) (x|lam)_{n-l}."""
    total = ZERO
    for l in range(n + 1):
        total = total + degenerate_poly_bernoulli(k, l, with_x=False) * degenerate_falling("x", n - l) * binom(n, l)
    return total


def rhs_theorem1(n: int, form: str = "full", binom: Binom = binomial) -> MultiPoly:
    """k = 2 formula in terms of beta_m(x|lam) and B_l/(l+1).

    ``form="full"`` is the single sum over l = 0..n; ``form="split"`` writes
    the l = 0 and l = 1 terms out as beta_n - (n/4) beta_{n-1}.
    """
    if form == "full":
        start, total = 0, ZERO
    elif form == "split":
        total = degenerate_bernoulli(n)
        if n >= 1:
            total = total - degenerate_bernoulli(n - 1) * Fraction(binom(n, 1), 4)
        start = 2
    else:
        raise ValueError(f"unknown Theorem 1 form {form!r}")
    for l in range(start, n + 1):
        c = binom(n, l) * bernoulli_number(l) / (l + 1)
        if c:
            total = total + degenerate_bernoulli(n - l) * c
    return total


def rhs_theorem2(k: int, n: int, binom: Binom = binomial) -> MultiPoly:
    """sum_l C(n,l) c_l(k) beta_{n-l}(x|lam) with the Stirling closed form c_l(k)."""
    total = ZERO
    for l in range(n + 1):
        c = binom(n, l) * polylog_factor_coeff(k, l)
        if c:
            total = total + degenerate_bernoulli(n - l) * c
    return total


def _t3_inner(k: int, p: int, variant: str) -> Fraction:
    s = Fraction(0)
    for m in range(p):
        if variant == "from-eq18":
            sign, st = _sign(m + p + 1), stirling2(p, m + 1)
        elif variant == "as-printed":
            # printed "(-1)^{m+k+1} ... S_2(k+m+1)"; read as S_2(k, m+1)
            sign, st = _sign(m + k + 1), stirling2(k, m + 1)
        else:
            raise ValueError(f"unknown Theorem 3 variant {variant!r}")
        if st:
            s += sign * Fraction(factorial(m + 1)) * Fraction(1, m + 1) ** k * st
    return s


def rhs_theorem3(k: int, n: int, variant: str = "from-eq18", binom: Binom = binomial) -> MultiPoly:
    """Forward difference beta_n^(k)(x+1|lam) - beta_n^(k)(x|lam), n >= 1."""
    if n < 1:
        raise ValueError("the forward-difference formula is stated for n >= 1")
    total = ZERO
    for p in range(1, n + 1):
        c = _t3_inner(k, p, variant) * binom(n, p)
        if c:
            total = total + degenerate_falling("x", n - p) * c
    return total


@lru_cache(maxsize=None)
def _scaled_carlitz(m: int, offset: int, d: int) -> MultiPoly:
    """beta_m((offset + x)/d | lam/d) by substitution into beta_m(x|lam)."""
    return degenerate_bernoulli(m).compose({"x": (X + offset) / d, "lam": LAM / d})


def rhs_theorem4(k: int, n: int, d: int, variant: str = "a-index", binom: Binom = binomial) -> MultiPoly:
    """Distribution formula over the residues a = 0..d-1."""
    if d < 1:
        raise ValueError("modulus d must be a positive integer")
    if variant not in VARIANTS["T4"]:
        raise ValueError(f"unknown Theorem 4 variant {variant!r}")
    total = ZERO
    for a in range(d):
        for l in range(n + 1):
            # inner sum over p is the closed-form coefficient c_l(k)
            c = binom(n, l) * polylog_factor_coeff(k, l) * Fraction(d) ** (n - l - 1)
            if not c:
                continue
            offset = a if variant == "a-index" else l
            total = total + _scaled_carlitz(n - l, offset, d) * c
    return total


def rhs_theorem5(k: int, n: int, binom: Binom = binomial) -> MultiPoly:
    """sum_l C(n,l) beta_l^(k)(x|lam) (y|lam)_{n-l}, a polynomial in x, y, lam."""
    total = ZERO
    for l in range(n + 1):
        total = total + degenerate_poly_bernoulli(k, l) * degenerate_falling("y", n - l) * binom(n, l)
    return total


def _falling_derivative(l: int) -> MultiPoly:
    # sum_j prod_{i != j} (x - lam i), i, j in 0..l-1
    factors = [X - LAM * i for i in range(l)]
    total = ZERO
    for j in range(l):
        term = ONE
        for i, f in enumerate(factors):
            if i != j:
                term = term * f
        total = total + term
    return total


def rhs_remark(k: int, n: int, binom: Binom = binomial) -> MultiPoly:
    """d/dx beta_n^(k)(x|lam) as sum_l C(n,l) beta_{n-l}^(k)(lam) sum_j prod_{i!=j}(x - lam i)."""
    total = ZERO
    for l in range(1, n + 1):
        total = total + degenerate_poly_bernoulli(k, n - l, with_x=False) * _falling_derivative(l) * binom(n, l)
    return total


# -- left-hand sides ------------------------------------------------------------


def _theorem3_lhs(k: int, n: int) -> MultiPoly:
    order = n + 1
    shifted = generating_series(k, order, (ONE, X))
    plain = generating_series(k, order, (X,))
    return (shifted - plain).coefficient(n)


def _theorem5_lhs(k: int, n: int) -> MultiPoly:
    return generating_series(k, n + 1, (X, Y)).coefficient(n)


@dataclass(frozen=True, order=True)
class IdentityCase:
    identity_id: str
    n: int
    k: int | None = None
    d: int | None = None
    variant: str | None = None

    def __post_init__(self):
        if self.identity_id not in IDENTITIES:
            raise ValueError(f"unknown identity {self.identity_id!r}")
        if self.identity_id == "T3" and self.n < 1:
            raise ValueError("T3 requires n >= 1")
        if self.identity_id == "T4" and (self.d is None or self.d < 1):
            raise ValueError("T4 requires a modulus d >= 1")

    @property
    def params(self) -> dict:
        return {name: v for name, v in (("n", self.n), ("k", self.k), ("d", self.d)) if v is not None}

    def sort_key(self):
        return (
            IDENTITIES.index(self.identity_id),
            self.k if self.k is not None else 0,
            self.d or 0,
            self.n,
            self.variant or "",
        )


def lhs_of(case: IdentityCase) -> MultiPoly:
    i, n, k = case.identity_id, case.n, case.k
    if i == "EQ2":
        return degenerate_bernoulli(n)
    if i in ("T1a", "T1b"):
        return degenerate_poly_bernoulli(2, n)
    if i in ("EQ12", "T2", "T4"):
        return degenerate_poly_bernoulli(k, n)
    if i == "T3":
        return _theorem3_lhs(k, n)
    if i == "T5":
        return _theorem5_lhs(k, n)
    if i == "REMARK":
        return degenerate_poly_bernoulli(k, n).diff("x")
    raise ValueError(i)


def rhs_of(case: IdentityCase, binom: Binom = binomial) -> MultiPoly:
    i, n, k = case.identity_id, case.n, case.k
    if i == "EQ2":
        return rhs_eq2(n, binom)
    if i == "EQ12":
        return rhs_eq12(k, n, binom)
    if i == "T1a":
        return rhs_theorem1(n, "full", binom)
    if i == "T1b":
        return rhs_theorem1(n, "split", binom)
    if i == "T2":
        return rhs_theorem2(k, n, binom)
    if i == "T3":
        return rhs_theorem3(k, n, case.variant or "from-eq18", binom)
    if i == "T4":
        return rhs_theorem4(k, n, case.d, case.variant or "a-index", binom)
    if i == "T5":
        return rhs_theorem5(k, n, binom)
    if i == "REMARK":
        return rhs_remark(k, n, binom)
    raise ValueError(i)


# -- verification driver ----------------------------------------------------------


@dataclass(frozen=True)
class CaseResult:
    case: IdentityCase
    verdict: str  # "equal" or "mismatch"
    witness: MultiPoly | None = None

    def __post_init__(self):
        if self.verdict == "mismatch" and not self.witness:
            raise ValueError("a mismatch must carry a nonzero witness")

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"

    def to_dict(self) -> dict:
        return {
            "id": self.case.identity_id,
            "params": self.case.params,
            "variant": self.case.variant,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_records(),
        }


def evaluate_case(case: IdentityCase, binom: Binom = binomial) -> CaseResult:
    diff = lhs_of(case) - rhs_of(case, binom)
    if diff.is_zero:
        return CaseResult(case, "equal")
    return CaseResult(case, "mismatch", diff)


@dataclass(frozen=True)
class VerificationReport:
    cases: tuple[CaseResult, ...] = ()

    def __len__(self) -> int:
        return len(self.cases)

    def __iter__(self):
        return iter(self.cases)

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.cases)

    def mismatches(self) -> list[CaseResult]:
        return [r for r in self.cases if not r.equal]

    def select(self, identity_id: str, variant: str | None = None) -> list[CaseResult]:
        return [
            r for r in self.cases
            if r.case.identity_id == identity_id and (variant is None or r.case.variant == variant)
        ]

    def to_list(self) -> list[dict]:
        return [r.to_dict() for r in self.cases]


def _threads_from_env() -> int:
    raw = os.environ.get("DEGENPOLY_THREADS", "0")
    try:
        return max(0, int(raw))
    except ValueError:
        raise ValueError(f"DEGENPOLY_THREADS must be an integer, got {raw!r}") from None


def run_verification(
    suite: Iterable[IdentityCase],
    binom: Binom = binomial,
    workers: int | None = None,
) -> VerificationReport:
    """Evaluate every case; report order is by identity, k, d, n, variant.

    ``workers`` defaults to ``DEGENPOLY_THREADS``; 0 or 1 runs serially.
    """
    cases = sorted(set(suite), key=IdentityCase.sort_key)
    if workers is None:
        workers = _threads_from_env()
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate_case, cases, [binom] * len(cases), chunksize=4))
    else:
        results = [evaluate_case(c, binom) for c in cases]
    return VerificationReport(tuple(results))


def _grid(identity_id: str, n_max=None, k_range=None, d_range=None):
    ns, ks, ds = DEFAULT_GRID[identity_id]
    if n_max is not None:
        ns = range(ns.start, n_max + 1)
    if ks is not None and k_range is not None:
        ks = k_range
    if ds is not None and d_range is not None:
        ds = d_range
    return ns, ks, ds


def build_suite(
    identities: Sequence[str] = IDENTITIES,
    n_max: int | None = None,
    k_range: Sequence[int] | None = None,
    d_range: Sequence[int] | None = None,
    variant: str | None = None,
) -> list[IdentityCase]:
    """Cases over the default grids, optionally overridden.

    For identities with candidate readings every variant is included unless
    ``variant`` pins one.
    """
    suite = []
    for ident in identities:
        ns, ks, ds = _grid(ident, n_max, k_range, d_range)
        if ident in VARIANTS:
            vs = VARIANTS[ident]
            if variant is not None:
                if variant not in vs:
                    raise ValueError(f"{ident} has no variant {variant!r}; choose from {vs}")
                vs = (variant,)
        else:
            vs = (None,)
        for n in ns:
            for k in (ks if ks is not None else (None,)):
                for d in (ds if ds is not None else (None,)):
                    for v in vs:
                        suite.append(IdentityCase(ident, n, k, d, v))
    return suite


@dataclass(frozen=True)
class Adjudication:
    identity_id: str
    winner: str | None
    evidence: dict = field(default_factory=dict)

    @property
    def resolved(self) -> bool:
        return self.winner is not None

    def to_dict(self) -> dict:
        return {"id": self.identity_id, "winner": self.winner, "resolved": self.resolved, "evidence": self.evidence}


def adjudicate(report: VerificationReport, identity_id: str) -> Adjudication:
    """Pick the unique variant that holds on every case of the grid.

    If no variant, or more than one, holds everywhere the identity is left
    unresolved.
    """
    evidence = {}
    holding = []
    for v in VARIANTS[identity_id]:
        results = report.select(identity_id, v)
        if not results:
            continue
        bad = [r for r in results if not r.equal]
        evidence[v] = {
            "equal": len(results) - len(bad),
            "mismatch": len(bad),
            "first_mismatch": bad[0].case.params if bad else None,
        }
        if not bad:
            holding.append(v)
    winner = holding[0] if len(holding) == 1 else None
    return Adjudication(identity_id, winner, evidence)


EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNRESOLVED = 0, 1, 2, 3


@dataclass(frozen=True)
class Verification:
    report: VerificationReport
    adjudications: tuple[Adjudication, ...]
    bounds: dict

    @property
    def status(self) -> int:
        if any(not a.resolved for a in self.adjudications):
            return EXIT_UNRESOLVED
        judged = {a.identity_id for a in self.adjudications}
        for r in self.report:
            if r.case.identity_id in judged:
                continue
            if not r.equal:
                return EXIT_MISMATCH
        return EXIT_OK

    def to_dict(self) -> dict:
        return {
            "bounds": self.bounds,
            "adjudication": [a.to_dict() for a in self.adjudications],
            "cases": self.report.to_list(),
        }


def verify(
    identities: Sequence[str] = IDENTITIES,
    n_max: int | None = None,
    k_range: Sequence[int] | None = None,
    d_range: Sequence[int] | None = None,
    variant: str | None = None,
    workers: int | None = None,
) -> Verification:
    """Build the suite, run it and adjudicate any identity whose variant was not pinned."""
    identities = tuple(identities)
    suite = build_suite(identities, n_max, k_range, d_range, variant)
    report = run_verification(suite, workers=workers)
    adjudications = tuple(
        adjudicate(report, i) for i in identities if i in VARIANTS and variant is None
    )
    bounds = {}
    for i in identities:
        ns, ks, ds = _grid(i, n_max, k_range, d_range)
        b = {"n": [ns.start, ns.stop - 1] if len(ns) else []}
        if ks is not None:
            b["k"] = sorted(ks)
        if ds is not None:
            b["d"] = sorted(ds)
        bounds[i] = b
    return Verification(report, adjudications, bounds)
