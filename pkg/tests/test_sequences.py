import pytest

from superchar.arcs import enumerate_arc_sets
from superchar.sequences import (
    aitken,
    arcs_seq,
    b3_count,
    b3_recursion,
    b_count,
    b_counts,
    bell_numbers,
    dim_seq,
    nst_seq,
    reconcile_b,
    reconcile_b3,
)

ARCS = [0, 1, 5, 23, 109, 544, 2876, 16113]
DIM = [0, 1, 6, 33, 182, 1034, 6122, 37927]
NST = [0, 0, 0, 1, 11, 89, 660, 4795]


def test_aitken_rows():
    t = aitken(5)
    assert t.row(1) == (1,)
    assert t.row(3) == (2, 3, 5)
    assert t.row(5) == (15, 20, 27, 37, 52)
    assert t[5, 5] == 52
    with pytest.raises(IndexError):
        t[3, 4]
    with pytest.raises(ValueError):
        aitken(0)


def test_bell_boundary():
    assert bell_numbers(10) == [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
    assert bell_numbers(0) == [1]


def test_pretty_triangle():
    lines = aitken(3).pretty().splitlines()
    assert [line.split() for line in lines] == [["1"], ["1", "2"], ["2", "3", "5"]]


def test_b_count_examples():
    assert b_count(4, 3) == 5
    assert b_count(4, 1) == 2
    assert b_counts(3) == (1, 2, 2)
    with pytest.raises(ValueError):
        b_count(4, 5)


def test_b3_count_examples():
    assert b3_count(4, 2, 1) == 1
    assert b3_count(3, 2, 1) == 1
    with pytest.raises(ValueError):
        b3_count(4, 1, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_b_counts_sum_to_bell(n):
    assert sum(b_counts(n)) == bell_numbers(n)[n]


@pytest.mark.parametrize("n", range(2, 9))
def test_b_count_lags_aitken_by_one_row(n):
    t = aitken(n)
    for k in range(1, n):
        assert b_count(n, k) == t[n - 1, k]
    assert b_count(n, n) == t[n - 1, n - 1]


def test_b_reconciliation():
    r = reconcile_b(8)
    assert r["explained"] and not r["shifted_disagreements"]
    assert r["same_index_disagreements"]


def test_b3_reconciliation():
    r = reconcile_b3(8)
    assert r["explained"] and not r["unexplained"]
    assert len(r["same_index_disagreements"]) == 54


def test_b3_recursion_small():
    b = b3_recursion(5)
    assert b[3, 2, 1] == 1
    assert b[4, 2, 1] == b[3, 2, 1]
    with pytest.raises(ValueError):
        b3_recursion(2)


@pytest.mark.parametrize("n", range(1, 9))
def test_routes_agree(n):
    i = n - 1
    assert arcs_seq(n) == arcs_seq(n, "formula") == ARCS[i]
    assert dim_seq(n) == dim_seq(n, "formula") == DIM[i]
    assert nst_seq(n) == nst_seq(n, "formula") == NST[i]


def test_unknown_route():
    with pytest.raises(ValueError):
        arcs_seq(3, "guess")


@pytest.mark.parametrize("n", range(2, 8))
def test_arc_frequency_depends_only_on_span(n):
    ps = enumerate_arc_sets(n)
    by_span = {}
    for i in range(1, n + 1):
        for l in range(i + 1, n + 1):
            c = sum(1 for lam in ps if (i, l) in lam.arc_set)
            by_span.setdefault(l - i, set()).add(c)
    assert all(len(v) == 1 for v in by_span.values())
    assert dim_seq(n) == sum(d * (n - d) * c.pop() for d, c in by_span.items())
