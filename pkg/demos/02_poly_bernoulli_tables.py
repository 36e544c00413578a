# # Degenerate poly-Bernoulli tables
#
# beta_n^(k)(x|lam) for any integer k, read off the generating series.

from degenpoly import build_bundle, poly_bernoulli_table, polylog_factor_coeff
from degenpoly.cli import render_table

# ## The series behind the table

bundle = build_bundle(6)
[str(c) for c in bundle.carlitz_kernel.egf_values()]

# Li_k(1 - e^-t)/t two ways: composing series, and the Stirling closed form.

for k in (-2, 0, 2, 3):
    by_composition = bundle.polylog_factor(k).egf_values()
    closed = [polylog_factor_coeff(k, l) for l in range(6)]
    print(k, [str(c) for c in closed], by_composition == closed)

# ## A table and its exports

table = poly_bernoulli_table(2, 4)
for n, entry in enumerate(table.entries):
    print(n, entry)

print(render_table(table, "latex"))

# csv needs at most one free variable, so evaluate lambda first.

print(render_table(table.evaluate({"lam": 0}), "csv"))

# json round-trips byte for byte.

text = table.to_json()
type(table).from_json(text).to_json() == text

# ## Negative k

print(poly_bernoulli_table(-2, 3).entries[3])
