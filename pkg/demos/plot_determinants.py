"""
Determinants of supercharacter tables
=====================================

"""

# the diagonal of the chi-rho factor gives the determinant as a signed power of q
from superchar import build_matrix, determinant, determinant_formula
from superchar.chartable import bareiss_determinant

for n in range(1, 6):
    print(n, determinant(n), "|", determinant_formula(n))

# an exact integer determinant at q = 2 agrees
n = 4
print(bareiss_determinant(build_matrix(n, "chi-kappa").evaluate(2)), determinant(n).eval(2))
