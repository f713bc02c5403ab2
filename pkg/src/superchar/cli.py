"""Command line front end: ``superchar {partitions,table,verify,det,seq}``.

Exit status: 0 on success (and all checks passing), 1 when a verification or
determinant comparison fails, 2 on usage or range errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import chartable, sequences
from .arcs import enumerate_arc_sets, iter_arc_tuples
from .chartable import CHECKS, KINDS, build_matrix, verify_decomposition
from .io import (
    evaluated_to_csv,
    evaluated_to_json,
    format_rational,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_pretty,
    pretty_table,
    rows_to_csv,
)

TABLE_CAP = 7
ENUM_CAP = 12
SEQ_NAMES = ("arcs", "dim", "nst", "bell", "aitken", "b3")
SEQ_CHECKS = ("seq_arcs", "seq_dim", "seq_nst", "aitken_shift", "b3_shift")


class UsageError(Exception):
    pass


def _cap(value: int, cap: int, what: str, allow_large: bool = False) -> None:
    if value < 0:
        raise UsageError(f"{what} must be nonnegative")
    if value > cap and not allow_large:
        raise UsageError(
            f"{what}={value} exceeds the supported cap of {cap}"
            + ("; pass --allow-large to override" if cap == TABLE_CAP else ""))


def _nonzero_q(q):
    if q is not None and q == 0:
        raise UsageError("--q must be nonzero")


# partitions -----------------------------------------------------------------

def cmd_partitions(args) -> tuple[int, str]:
    _cap(args.n, ENUM_CAP, "n")
    order = enumerate_arc_sets(args.n)
    header = ["partition"]
    if args.stats:
        header += ["arcs", "dim", "dimv", "rnode", "nst"]

    def row(lam):
        out = [str(lam)]
        if args.stats:
            out += [len(lam), lam.dim, " ".join(map(str, lam.dimv)),
                    " ".join(map(str, lam.rnode)), lam.self_nst]
        return out

    rows = [row(lam) for lam in order]
    if args.format == "json":
        return 0, json.dumps([dict(zip(header, r)) for r in rows], indent=1) + "\n"
    if args.format == "csv":
        return 0, rows_to_csv(header, rows)
    return 0, _aligned([header, *rows])


def _aligned(rows) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
                     for r in rows) + "\n"


# table ----------------------------------------------------------------------

def cmd_table(args) -> tuple[int, str]:
    _cap(args.n, TABLE_CAP, "n", args.allow_large)
    _nonzero_q(args.q)
    m = build_matrix(args.n, args.kind)
    if args.q is not None:
        values = m.evaluate(args.q)
        if args.format == "csv":
            return 0, evaluated_to_csv(m, values, args.q)
        if args.format == "json":
            return 0, evaluated_to_json(m, values, args.q)
        return 0, pretty_table(m.order, [[format_rational(v) for v in r] for r in values])
    if args.format == "csv":
        return 0, matrix_to_csv(m)
    if args.format == "json":
        return 0, matrix_to_json(m)
    return 0, matrix_to_pretty(m)


# verify ---------------------------------------------------------------------

def _sequence_checks(n: int, names: Sequence[str]) -> list[chartable.CheckResult]:
    out = []
    for name in names:
        detail = ""
        bad = None
        if name in ("seq_arcs", "seq_dim", "seq_nst"):
            f = {"seq_arcs": sequences.arcs_seq, "seq_dim": sequences.dim_seq,
                 "seq_nst": sequences.nst_seq}[name]
            if n >= 1:
                e, fo = f(n, "enumerate"), f(n, "formula")
                detail = f"enumerate={e} formula={fo}"
                if e != fo:
                    bad = {"n": str(n), "enumerate": str(e), "formula": str(fo)}
        elif name == "aitken_shift":
            if n >= 1:
                rep = sequences.reconcile_b(n)
                detail = (f"{len(rep['same_index_disagreements'])} same-index differences, "
                          "all explained by a one-row shift" if rep["explained"] else "")
                if not rep["explained"]:
                    bad = {k: str(v) for k, v in rep["shifted_disagreements"][0].items()}
        elif name == "b3_shift":
            if n >= 3:
                rep = sequences.reconcile_b3(n)
                detail = (f"{len(rep['same_index_disagreements'])} same-index differences, "
                          "all explained by a one-row shift" if rep["explained"] else "")
                if not rep["explained"]:
                    bad = {k: str(v) for k, v in rep["unexplained"][0].items()}
        out.append(chartable.CheckResult(name, bad is None, detail=detail, counterexample=bad))
    return out


def cmd_verify(args) -> tuple[int, str]:
    _cap(args.n, TABLE_CAP, "n", args.allow_large)
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
    else:
        names = [*CHECKS, *SEQ_CHECKS]
    unknown = [c for c in names if c not in CHECKS and c not in SEQ_CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {[*CHECKS, *SEQ_CHECKS]}")
    report = verify_decomposition(args.n, [c for c in names if c in CHECKS])
    report.checks.extend(_sequence_checks(args.n, [c for c in names if c in SEQ_CHECKS]))
    return (0 if report.passed else 1), json.dumps(report.to_dict(), indent=1) + "\n"


# det ------------------------------------------------------------------------

def cmd_det(args) -> tuple[int, str]:
    _cap(args.n, ENUM_CAP, "n")
    _nonzero_q(args.q)
    if args.q is not None:
        _cap(args.n, TABLE_CAP, "n (numeric determinant)", args.allow_large)
    symbolic = chartable.determinant(args.n)
    formula = chartable.determinant_formula(args.n)
    result = {
        "n": args.n,
        "symbolic": str(symbolic),
        "formula": str(formula),
        "match": symbolic == formula,
    }
    if args.q is not None:
        c = build_matrix(args.n, "chi-kappa")
        numeric = chartable.bareiss_determinant(c.evaluate(args.q))
        expected = formula.eval(args.q)
        result.update({
            "q": args.q,
            "numeric": format_rational(numeric),
            "formula_at_q": format_rational(expected),
            "numeric_match": numeric == expected,
        })
    ok = result["match"] and result.get("numeric_match", True)
    if args.format == "json":
        return (0 if ok else 1), json.dumps(result, indent=1) + "\n"
    lines = [f"{k}: {'match' if v is True else 'MISMATCH' if v is False else v}"
             for k, v in result.items()]
    return (0 if ok else 1), "\n".join(lines) + "\n"


# seq ------------------------------------------------------------------------

def _seq_rows(name: str, max_n: int, route: str):
    """Yield (index tuple, enumerate value or None, formula value or None)."""
    want_e = route in ("enumerate", "both")
    want_f = route in ("formula", "both")
    if name in ("arcs", "dim", "nst"):
        f = {"arcs": sequences.arcs_seq, "dim": sequences.dim_seq, "nst": sequences.nst_seq}[name]
        for n in range(1, max_n + 1):
            yield (n,), f(n, "enumerate") if want_e else None, f(n, "formula") if want_f else None
    elif name == "bell":
        bells = sequences.bell_numbers(max_n) if want_f else None
        for n in range(0, max_n + 1):
            e = sum(1 for _ in iter_arc_tuples(n)) if want_e else None
            yield (n,), e, bells[n] if want_f else None
    elif name == "aitken":
        table = sequences.aitken(max_n) if want_f else None
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                yield ((n, k), sequences.b_count(n, k) if want_e else None,
                       table[n, k] if want_f else None)
    elif name == "b3":
        table = sequences.b3_recursion(max_n) if want_f and max_n >= 3 else None
        for n in range(3, max_n + 1):
            for k in range(2, n):
                for j in range(1, k):
                    yield ((n, k, j), sequences.b3_count(n, k, j) if want_e else None,
                           table[n, k, j] if want_f else None)


_INDEX = {"arcs": ("n",), "dim": ("n",), "nst": ("n",), "bell": ("n",),
          "aitken": ("n", "k"), "b3": ("n", "k", "j")}
_DEFAULT_ROUTE = {"arcs": "enumerate", "dim": "enumerate", "nst": "enumerate",
                  "bell": "formula", "aitken": "formula", "b3": "formula"}


def cmd_seq(args) -> tuple[int, str]:
    route = args.route or _DEFAULT_ROUTE[args.name]
    uses_enumeration = route != "formula" or args.name in ("arcs", "dim", "nst")
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    if uses_enumeration:
        _cap(args.max_n, ENUM_CAP, "max-n (enumeration route)")
    idx = _INDEX[args.name]
    if route == "both":
        header = [*idx, "enumerate", "formula", "match"]
        rows = [[*i, e, f, str(e == f).lower()] for i, e, f in _seq_rows(args.name, args.max_n, route)]
    else:
        header = [*idx, "value"]
        rows = [[*i, e if route == "enumerate" else f]
                for i, e, f in _seq_rows(args.name, args.max_n, route)]
    if args.format == "json":
        return 0, json.dumps([dict(zip(header, r)) for r in rows]) + "\n"
    if args.format == "pretty":
        if args.name == "aitken" and route == "formula" and args.max_n >= 1:
            return 0, sequences.aitken(args.max_n).pretty() + "\n"
        return 0, _aligned([header, *rows])
    return 0, rows_to_csv(header, rows)


# entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="superchar",
        description="Supercharacter tables of UT_n(q) and related partition sequences.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("csv", "json", "pretty"), default="pretty"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("partitions", help="list set partitions in total order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--stats", action="store_true", help="add arcs, dim, dimv, rnode, nst columns")
    common(sp)

    sp = sub.add_parser("table", help="emit a basis matrix")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--q", type=int, help="substitute this nonzero integer for q")
    sp.add_argument("--allow-large", action="store_true")
    common(sp)

    sp = sub.add_parser("verify", help="check the LU factorization and sequence identities")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--checks", help="comma-separated subset of: " + ",".join([*CHECKS, *SEQ_CHECKS]))
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--output", "-o")

    sp = sub.add_parser("det", help="determinant of the supercharacter table")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, help="also compare an exact integer determinant at this q")
    sp.add_argument("--allow-large", action="store_true")
    common(sp, formats=("pretty", "json"))

    sp = sub.add_parser("seq", help="integer sequences and arrays")
    sp.add_argument("--name", choices=SEQ_NAMES, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--route", choices=("enumerate", "formula", "both"))
    common(sp, default="csv")
    return p


COMMANDS: dict[str, Callable] = {
    "partitions": cmd_partitions,
    "table": cmd_table,
    "verify": cmd_verify,
    "det": cmd_det,
    "seq": cmd_seq,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
