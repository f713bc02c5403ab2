"""
The supercharacter table and its LU factors
===========================================

"""

# chi-kappa is the table itself; chi-rho and rho-kappa are its triangular factors
from superchar import build_matrix, matrix_multiply
from superchar.io import matrix_to_pretty

C = build_matrix(3, "chi-kappa")
A = build_matrix(3, "chi-rho")
B = build_matrix(3, "rho-kappa")
print(matrix_to_pretty(C))
print(matrix_to_pretty(A))
print(matrix_to_pretty(B))

# the product reproduces the table exactly
print("A * B == C:", matrix_multiply(A, B) == C)

# closed formula against direct summation for one entry
from superchar import chi_to_rho_bruteforce, chi_to_rho_closed, parse_arc_set

lam, nu = parse_arc_set("n=4:1-4,2-3"), parse_arc_set("n=4:2-3")
print(chi_to_rho_closed(lam, nu), "|", chi_to_rho_bruteforce(lam, nu))
