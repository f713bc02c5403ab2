"""Aitken's array with its three-index refinement, plus partition statistic totals.

Each quantity has two routes: a direct count over set partitions and a
recursion or summation formula.  The counting definitions are normative.

Index conventions, established by the reconciliation tests:

* ``b_count(n, k)`` (partitions of [n] containing ``k-n``) equals
  ``aitken(n - 1)[n - 1, k]``, i.e. the recursive triangle lags the counts by
  one row.
* ``b3_count(n, k, j)`` equals ``b3_recursion(n - 1)[n - 1, k, j]`` for
  ``k <= n - 2``; the edge column ``k = n - 1`` equals ``b_count(n - 1, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .arcs import iter_arc_tuples, nst

__all__ = [
    "AitkenTable",
    "NestTable",
    "aitken",
    "bell_numbers",
    "b_count",
    "b_counts",
    "b3_count",
    "b3_counts",
    "b3_recursion",
    "reconcile_b",
    "reconcile_b3",
    "arcs_seq",
    "dim_seq",
    "nst_seq",
    "ROUTES",
]

ROUTES = ("enumerate", "formula")


@dataclass(frozen=True)
class AitkenTable:
    """Rows ``1..max_n`` of Aitken's array; ``table[n, k]`` is 1-based."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows)

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not (1 <= k <= n <= self.max_n):
            raise IndexError(f"no entry [{n}, {k}] in an Aitken table of {self.max_n} rows")
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def pretty(self) -> str:
        """Staggered triangle, one row per line, boundary Bell numbers on the right."""
        cells = [[str(v) for v in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        lines = []
        for n, row in enumerate(cells, start=1):
            pad = " " * ((self.max_n - n) * (width + 1) // 2)
            lines.append(pad + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def aitken(max_n: int) -> AitkenTable:
    """Aitken's array from ``a[1,1] = 1``, ``a[n,1] = a[n-1,n-1]``, ``a[n,k] = a[n,k-1] + a[n-1,k-1]``."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = [(1,)]
    for n in range(2, max_n + 1):
        prev = rows[-1]
        row = [prev[-1]]
        for k in range(2, n + 1):
            row.append(row[-1] + prev[k - 2])
        rows.append(tuple(row))
    return AitkenTable(tuple(rows))


def bell_numbers(max_n: int) -> list[int]:
    """``Bell(0..max_n)`` read off the boundary of Aitken's array."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if max_n == 0:
        return [1]
    table = aitken(max_n)
    return [1] + [table[n, n] for n in range(1, max_n + 1)]


# counting routes ------------------------------------------------------------

@lru_cache(maxsize=32)
def b_counts(n: int) -> tuple[int, ...]:
    """``(b_count(n, 1), ..., b_count(n, n))`` in one pass over the partitions of [n]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    counts = [0] * (n + 1)
    for arcs in iter_arc_tuples(n):
        into_n = next((i for i, l in arcs if l == n), n)
        counts[into_n] += 1
    return tuple(counts[1:])


def b_count(n: int, k: int) -> int:
    """Partitions of [n] containing the arc ``k-n`` (``k < n``), or with no arc into ``n`` (``k = n``)."""
    if not (1 <= k <= n):
        raise ValueError(f"b_count needs 1 <= k <= n, got n={n}, k={k}")
    return b_counts(n)[k - 1]


@lru_cache(maxsize=32)
def b3_counts(n: int) -> dict[tuple[int, int], int]:
    """``{(k, j): b3_count(n, k, j)}`` for every ``1 <= j < k <= n - 1``."""
    if n < 3:
        raise ValueError("b3 counts need n >= 3")
    counts = {(k, j): 0 for k in range(2, n) for j in range(1, k)}
    for arcs in iter_arc_tuples(n):
        left = {l: i for i, l in arcs}
        j = left.get(n)
        if j is None:
            continue
        k = left.get(n - 1, n - 1)
        if j < k:
            counts[(k, j)] += 1
    return counts


def b3_count(n: int, k: int, j: int) -> int:
    """Partitions of [n] with arcs ``j-n`` and ``k-(n-1)``; for ``k = n-1``, arc ``j-n`` and nothing into ``n-1``."""
    if n < 3 or not (1 <= j < k <= n - 1):
        raise ValueError(f"b3_count needs n >= 3 and 1 <= j < k <= n-1, got {(n, k, j)}")
    return b3_counts(n)[(k, j)]


@dataclass(frozen=True)
class NestTable:
    """``values[(n, k, j)]`` for ``3 <= n <= max_n`` and ``1 <= j < k <= n - 1``."""

    max_n: int
    values: dict[tuple[int, int, int], int] = field(repr=False)

    def __getitem__(self, nkj: tuple[int, int, int]) -> int:
        return self.values[nkj]


def b3_recursion(max_n: int) -> NestTable:
    """Fill the three-index array with the four displayed rules, verbatim.

    ``b[3,2,1] = 1``, ``b[n,2,1] = b[n-1,n-2,1]``,
    ``b[n,j+1,j] = b[n,j+1,j-1] + b[n-1,j,j-1]``,
    ``b[n,k,j] = b[n,k-1,j] + b[n-1,k-1,j]`` otherwise.
    """
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    b: dict[tuple[int, int, int], int] = {(3, 2, 1): 1}
    for n in range(4, max_n + 1):
        for k in range(2, n):
            for j in range(1, k):
                if k == 2:
                    b[n, 2, 1] = b[n - 1, n - 2, 1]
                elif k == j + 1:
                    b[n, k, j] = b[n, k, j - 1] + b[n - 1, j, j - 1]
                else:
                    b[n, k, j] = b[n, k - 1, j] + b[n - 1, k - 1, j]
    return NestTable(max_n, b)


# reconciliation -------------------------------------------------------------

def reconcile_b(max_n: int) -> dict[str, Any]:
    """Compare ``b_count`` with Aitken's array at the same index and one row back."""
    table = aitken(max_n)
    same, shifted = [], []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            c = b_count(n, k)
            if c != table[n, k]:
                same.append({"n": n, "k": k, "count": c, "aitken": table[n, k]})
            if n >= 2:
                ref = table[n - 1, min(k, n - 1)]
                if c != ref:
                    shifted.append({"n": n, "k": k, "count": c, "aitken_prev_row": ref})
    return {
        "max_n": max_n,
        "same_index_disagreements": same,
        "shifted_disagreements": shifted,
        "explained": not shifted,
    }


def reconcile_b3(max_n: int) -> dict[str, Any]:
    """Compare ``b3_count`` with the displayed recursion.

    Same-index disagreements are listed as counterexamples.  Each is checked
    against the shifted identity (counts at ``n`` equal the recursion at
    ``n - 1``, edge column ``k = n - 1`` equal to ``b_count(n - 1, j)``);
    anything the identity does not cover is reported as unexplained.
    """
    rec = b3_recursion(max_n)
    direct, unexplained = [], []
    for n in range(3, max_n + 1):
        for (k, j), c in sorted(b3_counts(n).items()):
            r = rec[n, k, j]
            if c != r:
                direct.append({"n": n, "k": k, "j": j, "count": c, "recursion": r})
            if n == 3:
                expected = r
            elif k <= n - 2:
                expected = rec[n - 1, k, j]
            else:
                expected = b_count(n - 1, j)
            if c != expected:
                unexplained.append({"n": n, "k": k, "j": j, "count": c, "shifted": expected})
    return {
        "max_n": max_n,
        "same_index_disagreements": direct,
        "unexplained": unexplained,
        "explained": not unexplained,
    }


# sequences ------------------------------------------------------------------

@lru_cache(maxsize=64)
def _enumerated_totals(n: int) -> tuple[int, int, int]:
    arcs_total = dim_total = nst_total = 0
    for arcs in iter_arc_tuples(n):
        arcs_total += len(arcs)
        dim_total += sum(l - i for i, l in arcs)
        nst_total += nst(arcs, arcs)
    return arcs_total, dim_total, nst_total


def _check_route(route: str) -> None:
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")


def arcs_seq(n: int, route: str = "enumerate") -> int:
    """Total number of arcs over all set partitions of [n]."""
    _check_route(route)
    if route == "enumerate":
        return _enumerated_totals(n)[0]
    return sum(k * b_count(n, k) for k in range(1, n))


def dim_seq(n: int, route: str = "enumerate") -> int:
    """Total span ``sum(l - i)`` over all set partitions of [n]."""
    _check_route(route)
    if route == "enumerate":
        return _enumerated_totals(n)[1]
    return sum(k * (n - k) * b_count(n, k) for k in range(1, n))


def nst_seq(n: int, route: str = "enumerate") -> int:
    """Total self-nesting ``nst(lam, lam)`` over all set partitions of [n]."""
    _check_route(route)
    if route == "enumerate":
        return _enumerated_totals(n)[2]
    if n < 4:
        return 0
    return sum(
        j * (k - j) * b3_count(n, k, j)
        for j in range(1, n - 2) for k in range(j + 1, n - 1))
