"""CSV / JSON / plain-text serialization of basis matrices and sequences.

Row and column keys are canonical arc set strings (``n=4:1-4,2-3``); entries
are Laurent polynomials rendered by ``str()`` in CSV and as
``{"exponent": "coefficient"}`` objects in JSON.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .arcs import ArcSet, enumerate_arc_sets, parse_arc_set
from .chartable import BasisMatrix
from .laurent import LaurentPoly, parse_laurent

__all__ = [
    "matrix_to_csv",
    "matrix_from_csv",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_pretty",
    "pretty_table",
    "evaluated_to_csv",
    "evaluated_to_json",
    "rows_to_csv",
    "format_rational",
]


def format_rational(x: int | Fraction) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _csv(rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    return _csv([list(header), *rows])


def matrix_to_csv(m: BasisMatrix) -> str:
    keys = [str(lam) for lam in m.order]
    return _csv([[m.kind, *keys], *([k, *map(str, row)] for k, row in zip(keys, m.entries))])


def _check_order(n: int, order: list[ArcSet]) -> None:
    if order != enumerate_arc_sets(n):
        raise ValueError("row/column keys are not the ascending set partitions of [n]")


def matrix_from_csv(text: str) -> BasisMatrix:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ValueError("empty CSV")
    kind, *col_keys = rows[0]
    order = [parse_arc_set(k) for k in col_keys]
    if not order:
        raise ValueError("CSV has no columns")
    n = order[0].n
    _check_order(n, order)
    if [parse_arc_set(r[0]) for r in rows[1:]] != order:
        raise ValueError("row keys differ from column keys")
    entries = tuple(tuple(parse_laurent(x) for x in r[1:]) for r in rows[1:])
    return BasisMatrix(n, kind, tuple(order), entries)


def matrix_to_json(m: BasisMatrix) -> str:
    doc = {
        "n": m.n,
        "kind": m.kind,
        "order": [str(lam) for lam in m.order],
        "entries": [[v.to_json() for v in row] for row in m.entries],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def matrix_from_json(text: str) -> BasisMatrix:
    doc = json.loads(text)
    order = [parse_arc_set(k) for k in doc["order"]]
    _check_order(doc["n"], order)
    entries = tuple(tuple(LaurentPoly.from_json(v) for v in row) for row in doc["entries"])
    return BasisMatrix(doc["n"], doc["kind"], tuple(order), entries)


def matrix_to_pretty(m: BasisMatrix) -> str:
    return pretty_table(m.order, [[str(v) for v in row] for row in m.entries])


def pretty_table(order: Sequence[ArcSet], cells: list[list[str]]) -> str:
    """Right-aligned text table labelled by arc lists (``{}`` for the empty partition)."""
    labels = [str(lam).partition(":")[2] or "{}" for lam in order]
    head = [""] + labels
    body = [[lab, *row] for lab, row in zip(labels, cells)]
    widths = [max(len(r[c]) for r in [head, *body]) for c in range(len(head))]
    lines = ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in [head, *body]]
    return "\n".join(lines) + "\n"


def evaluated_to_csv(m: BasisMatrix, values: list[list[int | Fraction]], q0: int) -> str:
    keys = [str(lam) for lam in m.order]
    return _csv([[f"{m.kind}@q={q0}", *keys],
                 *([k, *map(format_rational, row)] for k, row in zip(keys, values))])


def evaluated_to_json(m: BasisMatrix, values: list[list[int | Fraction]], q0: int) -> str:
    doc = {
        "n": m.n,
        "kind": m.kind,
        "q": q0,
        "order": [str(lam) for lam in m.order],
        "entries": [[format_rational(v) for v in row] for row in values],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"
