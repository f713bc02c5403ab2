"""Supercharacter table of UT_n(q) and its factorization through q-power-sums.

Three bases of superclass functions are indexed by set partitions:
supercharacters ``chi``, superclass indicators ``kappa`` and the q-power-sums
``rho``.  The supercharacter table is ``C = A @ B`` where ``A`` (chi -> rho)
is lower triangular over Z[q] and ``B`` (rho -> kappa) is upper unitriangular
over Z[q^-1].

Matrix entry conventions (row, column):

* ``chi-kappa``: value of chi^row on the superclass of column
* ``rho-kappa``: coefficient of kappa_column in rho_row
* ``kappa-rho``: coefficient of rho_column in kappa_row
* ``chi-rho``:   coefficient of rho_column in chi^row
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Any, Callable, Sequence

from .arcs import ArcSet, enumerate_arc_sets, nst, _same_n
from .laurent import ONE, ZERO, LaurentPoly, monomial, t_power

__all__ = [
    "KINDS",
    "BasisMatrix",
    "CheckResult",
    "VerifyReport",
    "supercharacter_value",
    "rho_to_kappa_coeff",
    "kappa_to_rho_coeff",
    "chi_to_rho_bruteforce",
    "chi_to_rho_closed",
    "diagonal_coeff",
    "build_matrix",
    "matrix_multiply",
    "verify_decomposition",
    "determinant",
    "determinant_formula",
    "bareiss_determinant",
    "CHECKS",
]

KINDS = ("chi-kappa", "rho-kappa", "kappa-rho", "chi-rho")


# per-entry formulas ---------------------------------------------------------

def supercharacter_value(lam: ArcSet, mu: ArcSet) -> LaurentPoly:
    """chi^lam evaluated on the superclass indexed by mu."""
    _same_n(lam, mu)
    conflict = lam.cflt
    if any(a in conflict for a in mu.arcs):
        return ZERO
    common = len(lam.arc_set & mu.arc_set)
    exp = lam.dim - len(lam.arcs) - nst(lam, mu)
    value = t_power(len(lam.arcs) - common).shift(exp)
    return -value if common % 2 else value


def rho_to_kappa_coeff(nu: ArcSet, mu: ArcSet) -> LaurentPoly:
    """Coefficient of kappa_mu in rho_nu(q): ``q^-nst(nu, mu - nu)`` when nu is inside mu."""
    _same_n(nu, mu)
    if not nu.arc_set <= mu.arc_set:
        return ZERO
    return monomial(1, -nst(nu, mu.arc_set - nu.arc_set))


def kappa_to_rho_coeff(mu: ArcSet, nu: ArcSet) -> LaurentPoly:
    """Coefficient of rho_nu in kappa_mu: ``(-1)^|nu - mu| q^-nst(nu, nu - mu)``."""
    _same_n(mu, nu)
    if not mu.arc_set <= nu.arc_set:
        return ZERO
    removed = nu.arc_set - mu.arc_set
    return monomial(-1 if len(removed) % 2 else 1, -nst(nu, removed))


def chi_to_rho_bruteforce(lam: ArcSet, nu: ArcSet) -> LaurentPoly:
    """Coefficient of rho_nu in chi^lam by summing over every mu inside nu.

    Reference implementation; exponential in ``len(nu)``.
    """
    _same_n(lam, nu)
    total = ZERO
    for r in range(len(nu.arcs) + 1):
        for sub in combinations(nu.arcs, r):
            mu = ArcSet._trusted(nu.n, sub)
            chi = supercharacter_value(lam, mu)
            if chi:
                total = total + chi * kappa_to_rho_coeff(mu, nu)
    return total


def chi_to_rho_closed(lam: ArcSet, nu: ArcSet) -> LaurentPoly:
    """Coefficient of rho_nu in chi^lam from the closed product formula.

    ``(-1)^|nu| t^|lam - nu| q^(dim lam - |lam| - snst(lam, nu) - nst(nu, nu))``
    times one bracket per arc ``a`` of nu:

    * ``a`` in lam: ``t q^nst(lam, a) + q^nst(nu, a)``
    * ``a`` not in lam nor in cflt(lam): ``q^nst(lam, a) - q^nst(nu, a)``
    * ``a`` in cflt(lam): no bracket
    """
    _same_n(lam, nu)
    lam_arcs = lam.arc_set
    conflict = lam.cflt
    brackets = []
    snst_ = 0
    nst_nu = 0
    for a in nu.arcs:
        in_lam = nst(lam.arcs, (a,))
        in_nu = nst(nu.arcs, (a,))
        nst_nu += in_nu
        if a in lam_arcs:
            snst_ += in_lam
            brackets.append(t_power(1).shift(in_lam) + monomial(1, in_nu))
        elif a not in conflict:
            if in_lam == in_nu:
                return ZERO
            snst_ += in_lam
            brackets.append(monomial(1, in_lam) - monomial(1, in_nu))
    exp = lam.dim - len(lam.arcs) - snst_ - nst_nu
    outside = len(lam_arcs - nu.arc_set)
    value = t_power(outside).shift(exp)
    for b in brackets:
        value = value * b
    return -value if len(nu.arcs) % 2 else value


def diagonal_coeff(lam: ArcSet) -> LaurentPoly:
    """``(-1)^|lam| q^(dim lam - nst(lam, lam))``, the diagonal of the chi -> rho matrix."""
    return monomial(-1 if len(lam.arcs) % 2 else 1, lam.dim - lam.self_nst)


_ENTRY: dict[str, Callable[[ArcSet, ArcSet], LaurentPoly]] = {
    "chi-kappa": supercharacter_value,
    "rho-kappa": rho_to_kappa_coeff,
    "kappa-rho": kappa_to_rho_coeff,
    "chi-rho": chi_to_rho_closed,
}


# matrices -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BasisMatrix:
    """Square matrix of Laurent polynomials indexed by the ordered set partitions of ``[n]``."""

    n: int
    kind: str
    order: tuple[ArcSet, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        size = len(self.order)
        if len(self.entries) != size or any(len(r) != size for r in self.entries):
            raise ValueError("entries must be a square array matching the order")
        object.__setattr__(self, "_index", {lam: i for i, lam in enumerate(self.order)})

    @property
    def size(self) -> int:
        return len(self.order)

    def index(self, lam: ArcSet) -> int:
        return self._index[lam]

    def __getitem__(self, key: tuple[ArcSet | int, ArcSet | int]) -> LaurentPoly:
        r, c = key
        if isinstance(r, ArcSet):
            r = self._index[r]
        if isinstance(c, ArcSet):
            c = self._index[c]
        return self.entries[r][c]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasisMatrix):
            return NotImplemented
        return (self.n, self.kind, self.order, self.entries) == (
            other.n, other.kind, other.order, other.entries)

    def nonzero_rows(self) -> list[list[tuple[int, LaurentPoly]]]:
        return [[(j, v) for j, v in enumerate(row) if v] for row in self.entries]

    def is_identity(self) -> bool:
        return all(
            v == (ONE if i == j else ZERO)
            for i, row in enumerate(self.entries) for j, v in enumerate(row))

    def evaluate(self, q0: int | Fraction) -> list[list[int | Fraction]]:
        """Entrywise exact substitution ``q = q0``."""
        return [[v.eval(q0) for v in row] for row in self.entries]


def build_matrix(n: int, kind: str) -> BasisMatrix:
    """Fill a ``Bell(n) x Bell(n)`` matrix of the given kind in ascending total order."""
    if kind not in _ENTRY:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {KINDS}")
    order = tuple(enumerate_arc_sets(n))
    f = _ENTRY[kind]
    if kind in ("rho-kappa", "kappa-rho"):
        # both transition matrices vanish unless row is a subset of column
        entries = tuple(
            tuple(f(lam, mu) if lam.arc_set <= mu.arc_set else ZERO for mu in order)
            for lam in order)
    else:
        entries = tuple(tuple(f(lam, mu) for mu in order) for lam in order)
    return BasisMatrix(n, kind, order, entries)


def matrix_multiply(a: BasisMatrix, b: BasisMatrix) -> BasisMatrix:
    """Exact product of two basis matrices; the kinds must chain (``x-y`` times ``y-z``)."""
    if a.n != b.n or a.order != b.order:
        raise ValueError("matrices are indexed by different node counts")
    left, _, mid = a.kind.partition("-")
    mid2, _, right = b.kind.partition("-")
    if mid != mid2:
        raise ValueError(f"cannot multiply {a.kind} by {b.kind}")
    size = a.size
    b_rows = b.nonzero_rows()
    rows = []
    for i in range(size):
        acc: list[LaurentPoly] = [ZERO] * size
        for k, av in enumerate(a.entries[i]):
            if not av:
                continue
            for j, bv in b_rows[k]:
                acc[j] = acc[j] + av * bv
        rows.append(tuple(acc))
    return BasisMatrix(a.n, f"{left}-{right}", a.order, tuple(rows))


# verification ---------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict[str, str] | None = None
    seconds: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerifyReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _mismatch(row: ArcSet, col: ArcSet, expected, actual) -> dict[str, str]:
    return {"row": str(row), "column": str(col), "expected": str(expected), "actual": str(actual)}


def _first_failure(order, cells) -> dict[str, str] | None:
    for i, j, expected, actual in cells:
        if expected != actual:
            return _mismatch(order[i], order[j], expected, actual)
    return None


def _check_lu(ctx):
    c, prod = ctx["C"], ctx["AB"]
    order = c.order
    return _first_failure(order, (
        (i, j, c.entries[i][j], prod.entries[i][j])
        for i in range(c.size) for j in range(c.size)))


def _check_lower(ctx):
    a = ctx["A"]
    for i, row in enumerate(a.entries):
        for j in range(i + 1, a.size):
            if row[j]:
                return _mismatch(a.order[i], a.order[j], ZERO, row[j])
    return None


def _check_upper_unit(ctx):
    b = ctx["B"]
    order = b.order
    for i in range(b.size):
        for j in range(i + 1):
            want = ONE if i == j else ZERO
            if b.entries[i][j] != want:
                return _mismatch(order[i], order[j], want, b.entries[i][j])
    return None


def _check_entries(matrix, pred, label):
    for i, row in enumerate(matrix.entries):
        for j, v in enumerate(row):
            if not pred(v):
                return _mismatch(matrix.order[i], matrix.order[j], label, v)
    return None


def _check_a_integral(ctx):
    return _check_entries(ctx["A"], LaurentPoly.is_polynomial, "element of Z[q]")


def _check_b_integral(ctx):
    return _check_entries(ctx["B"], LaurentPoly.is_inverse_polynomial, "element of Z[q^-1]")


def _check_diagonal(ctx):
    a = ctx["A"]
    return _first_failure(a.order, (
        (i, i, diagonal_coeff(lam), a.entries[i][i]) for i, lam in enumerate(a.order)))


def _check_oracle(ctx):
    a = ctx["A"]
    for i, lam in enumerate(a.order):
        for j, nu in enumerate(a.order):
            brute = chi_to_rho_bruteforce(lam, nu)
            if a.entries[i][j] != brute:
                return _mismatch(lam, nu, brute, a.entries[i][j])
    return None


def _check_inverse(ctx):
    prod = matrix_multiply(ctx["K"], ctx["B"])
    order = prod.order
    return _first_failure(order, (
        (i, j, ONE if i == j else ZERO, prod.entries[i][j])
        for i in range(prod.size) for j in range(prod.size)))


def _check_determinant(ctx):
    n = ctx["n"]
    sym = determinant(n, ctx["A"])
    formula = determinant_formula(n)
    if sym != formula:
        return {"expected": str(formula), "actual": str(sym), "route": "symbolic"}
    q0 = 2
    numeric = bareiss_determinant(ctx["C"].evaluate(q0))
    if numeric != formula.eval(q0):
        return {"expected": str(formula.eval(q0)), "actual": str(numeric), "route": "q=2"}
    return None


# name -> (needed matrices, check)
CHECKS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "lu_product": (("C", "A", "B", "AB"), _check_lu),
    "a_lower_triangular": (("A",), _check_lower),
    "b_upper_unitriangular": (("B",), _check_upper_unit),
    "a_integral": (("A",), _check_a_integral),
    "b_inverse_integral": (("B",), _check_b_integral),
    "a_diagonal": (("A",), _check_diagonal),
    "closed_equals_bruteforce": (("A",), _check_oracle),
    "kappa_rho_inverse": (("K", "B"), _check_inverse),
    "determinant": (("C", "A"), _check_determinant),
}


def verify_decomposition(n: int, checks: Sequence[str] | None = None) -> VerifyReport:
    """Run the LU, triangularity, integrality, diagonal, oracle, inversion and determinant checks.

    Failures are recorded in the report with the first counterexample; nothing
    is raised for a failing check.
    """
    names = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; expected a subset of {list(CHECKS)}")
    ctx: dict[str, Any] = {"n": n, "order": tuple(enumerate_arc_sets(n))}
    builders = {
        "C": lambda: build_matrix(n, "chi-kappa"),
        "A": lambda: build_matrix(n, "chi-rho"),
        "B": lambda: build_matrix(n, "rho-kappa"),
        "K": lambda: build_matrix(n, "kappa-rho"),
        "AB": lambda: matrix_multiply(ctx["A"], ctx["B"]),
    }
    report = VerifyReport(n)
    for name in names:
        needs, fn = CHECKS[name]
        start = time.perf_counter()
        for m in needs:
            if m not in ctx:
                ctx[m] = builders[m]()
        bad = fn(ctx)
        report.checks.append(CheckResult(
            name, bad is None, counterexample=bad,
            seconds=time.perf_counter() - start))
    return report


# determinants ---------------------------------------------------------------

def determinant(n: int, a: BasisMatrix | None = None) -> LaurentPoly:
    """det C as the product of the diagonal of the chi -> rho matrix."""
    if a is None:
        order = enumerate_arc_sets(n)
        diag = [chi_to_rho_closed(lam, lam) for lam in order]
    else:
        diag = [a.entries[i][i] for i in range(a.size)]
    out = ONE
    for d in diag:
        out = out * d
    return out


def determinant_formula(n: int) -> LaurentPoly:
    """``(-1)^arcs(n) q^(dim(n) - nst(n))`` from the enumerated sequences."""
    from .sequences import arcs_seq, dim_seq, nst_seq

    if n == 0:
        return ONE
    sign = -1 if arcs_seq(n) % 2 else 1
    return monomial(sign, dim_seq(n) - nst_seq(n))


def bareiss_determinant(matrix: Sequence[Sequence[int | Fraction]]) -> int | Fraction:
    """Fraction-free Gaussian elimination (Bareiss) for an exact determinant.

    Integer input stays integer throughout; rational input is scaled to
    integers first.
    """
    size = len(matrix)
    if size == 0:
        return 1
    scale = Fraction(1)
    rows = []
    for row in matrix:
        if len(row) != size:
            raise ValueError("matrix is not square")
        if all(isinstance(v, int) for v in row):
            rows.append(list(row))
            continue
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        rows.append([int(v * den) for v in fr])
        scale /= den
    m = rows
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    det = sign * m[-1][-1]
    if scale == 1:
        return det
    out = det * scale
    return int(out) if out.denominator == 1 else out
