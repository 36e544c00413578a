# # Degenerate Bernoulli polynomials
#
# Everything is exact: coefficients are fractions and lambda stays a symbol.

# ## Imports

from degenpoly import degenerate_bernoulli, degenerate_falling, classical_bernoulli_poly

# ## The degenerate falling factorial (x|lam)_n

for n in range(4):
    print(n, degenerate_falling("x", n))

# ## Carlitz's beta_n(x|lam)

for n in range(5):
    print(f"beta_{n}(x|lam) =", degenerate_bernoulli(n))

# The numbers beta_n(lam) are the x = 0 values.

[str(degenerate_bernoulli(n, with_x=False)) for n in range(5)]

# ## lambda -> 0
#
# Every coefficient is a polynomial in lambda, so the limit is a substitution.

for n in range(6):
    limit = degenerate_bernoulli(n).substitute("lam", 0)
    print(n, limit, limit == classical_bernoulli_poly(n))

# ## Evaluating at rational points

from fractions import Fraction

b4 = degenerate_bernoulli(4)
b4.substitute("lam", Fraction(1, 2)).substitute("x", 3)
