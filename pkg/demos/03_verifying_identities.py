# # Checking the identities
#
# Each right-hand side is computed on its own and compared with the
# coefficient of the generating series.  Equality is exact polynomial equality.

from degenpoly.identities import (
    IdentityCase,
    build_suite,
    evaluate_case,
    run_verification,
    shifted_binomial,
    verify,
)

# ## A single case

evaluate_case(IdentityCase("T2", 6, k=-1))

# ## Forward difference: two readings of the printed formula

result = verify(("T3",), n_max=8)
for a in result.adjudications:
    print(a.identity_id, "->", a.winner)
    print(a.evidence)

# The rejected reading leaves a nonzero witness polynomial.

bad = evaluate_case(IdentityCase("T3", 3, k=2, variant="as-printed"))
print(bad.verdict, bad.witness)

# ## Distribution formula over residues mod d

result = verify(("T4",), n_max=5, d_range=[1, 2, 3])
[(a.identity_id, a.winner) for a in result.adjudications]

# ## Negative control
#
# Shift every binomial C(n, l) to C(n, l+1) and the checks fail.

report = run_verification(build_suite(("T5",), n_max=4, k_range=[2]), binom=shifted_binomial)
[(r.case.n, r.verdict) for r in report]

# ## Everything at the default grids

full = verify()
print(len(full.report), "cases, exit status", full.status)
