"""Exact degenerate (poly-)Bernoulli polynomials and identity verification."""
from functools import _lru_cache_wrapper

from . import combinatorics, degenerate, exact, identities, series
from .combinatorics import bernoulli_number, classical_bernoulli_poly, classical_poly_bernoulli, stirling1_signed, stirling2
from .degenerate import (
    SequenceTable,
    build_bundle,
    degenerate_bernoulli,
    degenerate_falling,
    degenerate_poly_bernoulli,
    poly_bernoulli_table,
    polylog_factor_coeff,
)
from .exact import LAM, ONE, X, Y, ZERO, MultiPoly
from .identities import IdentityCase, run_verification, verify
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "bernoulli_number",
    "build_bundle",
    "classical_bernoulli_poly",
    "classical_poly_bernoulli",
    "clear_caches",
    "combinatorics",
    "degenerate",
    "degenerate_bernoulli",
    "degenerate_falling",
    "degenerate_poly_bernoulli",
    "exact",
    "identities",
    "IdentityCase",
    "LAM",
    "MultiPoly",
    "ONE",
    "poly_bernoulli_table",
    "polylog_factor_coeff",
    "run_verification",
    "SequenceTable",
    "series",
    "stirling1_signed",
    "stirling2",
    "TruncatedSeries",
    "verify",
    "X",
    "Y",
    "ZERO",
]


def clear_caches() -> None:
    """Drop every memoized table (used to time computations from cold)."""
    for mod in (combinatorics, degenerate, identities):
        for obj in vars(mod).values():
            if isinstance(obj, _lru_cache_wrapper):
                obj.cache_clear()
