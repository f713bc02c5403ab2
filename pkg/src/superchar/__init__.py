"""Supercharacter tables of unipotent upper-triangular groups and their LU factorization."""

from .arcs import ArcSet, enumerate_arc_sets, parse_arc_set
from .chartable import (
    BasisMatrix,
    VerifyReport,
    build_matrix,
    chi_to_rho_bruteforce,
    chi_to_rho_closed,
    determinant,
    determinant_formula,
    matrix_multiply,
    supercharacter_value,
    verify_decomposition,
)
from .laurent import LaurentPoly, parse_laurent, t_power

__version__ = "0.1.0"
