from fractions import Fraction
from itertools import permutations

import pytest

import golden_n4 as golden
from superchar.arcs import ArcSet, enumerate_arc_sets, nst, snst
from superchar.chartable import (
    KINDS,
    bareiss_determinant,
    build_matrix,
    chi_to_rho_bruteforce,
    chi_to_rho_closed,
    determinant,
    determinant_formula,
    diagonal_coeff,
    kappa_to_rho_coeff,
    matrix_multiply,
    rho_to_kappa_coeff,
    supercharacter_value,
    verify_decomposition,
)
from superchar.laurent import ONE, Q, T, ZERO, monomial


def A(n, *arcs):
    return ArcSet(n, tuple(arcs))


def gauss_det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    size, det = len(m), Fraction(1)
    for k in range(size):
        p = next((r for r in range(k, size) if m[r][k]), None)
        if p is None:
            return 0
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, size):
            f = m[r][k] / m[k][k]
            for c in range(k, size):
                m[r][c] -= f * m[k][c]
    return det


def leibniz_det(rows):
    total = 0
    size = len(rows)
    for perm in permutations(range(size)):
        inv = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        prod = 1
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += -prod if inv % 2 else prod
    return total


# single entries


def test_supercharacter_examples():
    lam = A(4, (1, 4), (2, 3))
    assert supercharacter_value(lam, ArcSet(4)) == T ** 2 * Q ** 2
    assert supercharacter_value(lam, A(4, (1, 3))) == ZERO
    assert supercharacter_value(lam, lam) == Q
    assert supercharacter_value(A(2, (1, 2)), A(2, (1, 2))) == -ONE
    assert supercharacter_value(ArcSet(3), A(3, (1, 3))) == ONE


def test_rho_kappa_examples():
    assert rho_to_kappa_coeff(A(4, (1, 4)), A(4, (1, 4), (2, 3))) == Q ** -1
    assert rho_to_kappa_coeff(A(4, (2, 3)), A(4, (1, 4), (2, 3))) == ONE
    assert rho_to_kappa_coeff(A(4, (1, 2)), A(4, (1, 3))) == ZERO


def test_kappa_rho_examples():
    assert kappa_to_rho_coeff(A(4, (1, 4)), A(4, (1, 4), (2, 3))) == -(Q ** -1)
    assert kappa_to_rho_coeff(ArcSet(4), A(4, (1, 2), (3, 4))) == ONE
    assert kappa_to_rho_coeff(A(4, (1, 2)), A(4, (2, 3))) == ZERO


def test_chi_rho_examples():
    lam = A(4, (1, 4), (2, 3))
    expected = -T * (Q ** 3 - Q ** 2 + Q)
    assert chi_to_rho_bruteforce(lam, A(4, (2, 3))) == expected
    assert chi_to_rho_closed(lam, A(4, (2, 3))) == expected
    assert chi_to_rho_closed(lam, lam) == Q ** 3 == diagonal_coeff(lam)
    assert chi_to_rho_closed(A(2, (1, 2)), A(2, (1, 2))) == -Q


def test_unknown_kind():
    with pytest.raises(ValueError):
        build_matrix(3, "chi-chi")


def test_mismatched_n():
    with pytest.raises(ValueError):
        supercharacter_value(ArcSet(3), ArcSet(4))


def test_multiply_requires_chaining_kinds():
    a = build_matrix(3, "chi-kappa")
    with pytest.raises(ValueError):
        matrix_multiply(a, a)


# published n = 4 tables


def _diff(computed, printed):
    return [(i, j) for i in range(15) for j in range(15)
            if computed.entries[i][j] != printed[i][j]]


def test_golden_order():
    assert golden.order() == enumerate_arc_sets(4)


def test_golden_rho_kappa_matches():
    assert [list(r) for r in build_matrix(4, "rho-kappa").entries] == golden.table(golden.RHO_TO_KAPPA)


def test_printed_tables_are_mutually_inconsistent():
    """The printed C, A and B cannot all be right: printed A times printed B is not printed C."""
    c = golden.table(golden.SUPERCHARACTER_TABLE)
    a = golden.table(golden.CHI_TO_RHO)
    b = golden.table(golden.RHO_TO_KAPPA)
    product = [[sum((a[i][k] * b[k][j] for k in range(15)), ZERO) for j in range(15)]
               for i in range(15)]
    bad = [(i, j) for i in range(15) for j in range(15) if product[i][j] != c[i][j]]
    assert len(bad) == 68


def test_printed_supercharacter_table_has_one_transposed_pair():
    order = golden.order()
    computed = build_matrix(4, "chi-kappa")
    printed = golden.table(golden.SUPERCHARACTER_TABLE)
    bad = _diff(computed, printed)
    row = order.index(A(4, (1, 2)))
    c1, c2 = order.index(A(4, (1, 2), (2, 4))), order.index(A(4, (1, 3), (3, 4)))
    assert bad == [(row, c1), (row, c2)]
    assert printed[row][c1] == computed.entries[row][c2] == T
    assert printed[row][c2] == computed.entries[row][c1] == -ONE


def test_printed_chi_rho_table_drops_conflict_entries():
    """Besides one sign, every printed discrepancy is a zero where nu meets cflt(lam)."""
    order = golden.order()
    computed = build_matrix(4, "chi-rho")
    printed = golden.table(golden.CHI_TO_RHO)
    bad = _diff(computed, printed)
    sign_entry = (order.index(A(4, (1, 4), (2, 3))), order.index(A(4, (2, 3))))
    assert sign_entry in bad
    assert printed[sign_entry[0]][sign_entry[1]] == -computed.entries[sign_entry[0]][sign_entry[1]]
    rest = [e for e in bad if e != sign_entry]
    assert len(rest) == 49
    for i, j in rest:
        lam, nu = order[i], order[j]
        assert printed[i][j] == ZERO
        assert nu.arc_set & lam.cflt
        assert computed.entries[i][j] == chi_to_rho_bruteforce(lam, nu) != ZERO


def test_computed_n4_tables_factor():
    a, b, c = (build_matrix(4, k) for k in ("chi-rho", "rho-kappa", "chi-kappa"))
    assert matrix_multiply(a, b) == c


# invariants


@pytest.mark.parametrize("n", range(0, 6))
def test_vanishing_condition_via_three_indices(n):
    """chi^lam(mu) = 0 iff some lam-arc and mu-arc share an endpoint with a third index between."""
    ps = enumerate_arc_sets(n)
    for lam in ps:
        for mu in ps:
            hit = any((i == a and b < l) or (l == b and i < a)
                      for i, l in lam.arcs for a, b in mu.arcs)
            assert (supercharacter_value(lam, mu) == ZERO) == hit


@pytest.mark.parametrize("n", range(0, 6))
def test_supercharacter_entries_are_polynomial(n):
    for row in build_matrix(n, "chi-kappa").entries:
        assert all(v.is_polynomial() for v in row)


@pytest.mark.parametrize("n", range(0, 6))
def test_inversion(n):
    k, b = build_matrix(n, "kappa-rho"), build_matrix(n, "rho-kappa")
    assert matrix_multiply(k, b).is_identity()
    assert matrix_multiply(b, k).is_identity()


@pytest.mark.parametrize("n", range(0, 6))
def test_closed_formula_matches_oracle(n):
    ps = enumerate_arc_sets(n)
    for lam in ps:
        for nu in ps:
            v = chi_to_rho_closed(lam, nu)
            assert v == chi_to_rho_bruteforce(lam, nu)
            assert v.is_polynomial()


def test_exponent_bound_counterexample():
    # chained arcs inside one outer arc beat the per-arc floor((l - i - 1) / 2) estimate
    lam = A(5, (1, 5), (2, 3), (3, 4))
    assert snst(lam, lam) + nst(lam, lam) + len(lam) == 7 > lam.dim == 6
    assert chi_to_rho_closed(lam, lam) == -(Q ** 4)


@pytest.mark.parametrize("n", range(0, 7))
def test_rho_kappa_at_q1_is_subset_incidence(n):
    m = build_matrix(n, "rho-kappa").evaluate(1)
    ps = enumerate_arc_sets(n)
    for i, nu in enumerate(ps):
        for j, mu in enumerate(ps):
            assert m[i][j] == (1 if nu.arc_set <= mu.arc_set else 0)


@pytest.mark.parametrize("n", range(0, 6))
def test_verify_report_passes(n):
    report = verify_decomposition(n)
    assert report.passed, report.to_dict()
    assert {c.name for c in report.checks} >= {"lu_product", "closed_equals_bruteforce"}


def test_verify_rejects_unknown_check():
    with pytest.raises(ValueError):
        verify_decomposition(3, ["nope"])


@pytest.mark.parametrize("n, expected", [
    (0, ONE), (1, ONE), (2, -Q), (3, monomial(-1, 6)), (4, -(Q ** 32)),
])
def test_determinant_values(n, expected):
    assert determinant(n) == expected == determinant_formula(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_determinant_numeric(n):
    c = build_matrix(n, "chi-kappa").evaluate(2)
    assert bareiss_determinant(c) == determinant(n).eval(2)


def test_bareiss_against_other_methods():
    c3 = build_matrix(3, "chi-kappa").evaluate(3)
    assert bareiss_determinant(c3) == leibniz_det(c3)
    c4 = build_matrix(4, "chi-rho").evaluate(Fraction(1, 2))
    assert bareiss_determinant(c4) == gauss_det(c4)
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[Fraction(1, 2), 1], [1, 3]]) == Fraction(1, 2)


def test_kinds_constant():
    assert set(KINDS) == {"chi-kappa", "rho-kappa", "kappa-rho", "chi-rho"}
