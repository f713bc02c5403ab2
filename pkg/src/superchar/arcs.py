"""Set partitions of ``{1, ..., n}`` written as arc diagrams.

A set partition is stored as the arcs ``i-l`` joining consecutive elements of
each block.  The arc statistics below (spans, nestings, conflicts) are the
ingredients of every table entry in :mod:`superchar.chartable`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache, total_ordering
from typing import Iterable, Iterator, Union

__all__ = [
    "ArcSet",
    "Arc",
    "enumerate_arc_sets",
    "iter_arc_tuples",
    "is_valid_arc_set",
    "parts",
    "arc_count",
    "dim_stat",
    "dimv",
    "rnode",
    "nst",
    "cflt",
    "snst",
    "is_subset",
    "order_key",
    "total_order_cmp",
    "parse_arc_set",
]

Arc = tuple[int, int]
ArcLike = Union["ArcSet", Iterable[Arc]]


def _check_range(n: int, arcs: Iterable[Arc]) -> tuple[Arc, ...]:
    out = []
    for a in arcs:
        i, l = a
        if not (isinstance(i, int) and isinstance(l, int) and 1 <= i < l <= n):
            raise ValueError(f"arc {i}-{l} is not a pair 1 <= i < l <= {n}")
        out.append((i, l))
    return tuple(sorted(set(out)))


def is_valid_arc_set(n: int, arcs: Iterable[Arc]) -> bool:
    """Whether ``arcs`` is the arc diagram of a set partition of ``[n]``.

    Raises ``ValueError`` when some pair is not ``1 <= i < l <= n``.
    """
    arcs = _check_range(n, arcs)
    lefts = [i for i, _ in arcs]
    rights = [l for _, l in arcs]
    return len(set(lefts)) == len(lefts) and len(set(rights)) == len(rights)


@total_ordering
@dataclass(frozen=True, eq=False)
class ArcSet:
    """A set partition of ``[n]`` as a sorted tuple of arcs ``(i, l)``, ``i < l``.

    Instances compare by the total order used for every basis matrix: span
    multiset (``dimv``) first, then right endpoints (``rnode``), then the arc
    list itself.  Comparing arc sets on different ``n`` raises ``ValueError``.
    """

    n: int
    arcs: tuple[Arc, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"node count must be a nonnegative int, got {self.n!r}")
        arcs = _check_range(self.n, self.arcs)
        if not is_valid_arc_set(self.n, arcs):
            raise ValueError(f"arcs {arcs} do not form a set partition of [{self.n}]")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def _trusted(cls, n: int, arcs: tuple[Arc, ...]) -> "ArcSet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "arcs", arcs)
        return obj

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def dim(self) -> int:
        return sum(l - i for i, l in self.arcs)

    @cached_property
    def dimv(self) -> tuple[int, ...]:
        return tuple(sorted((l - i for i, l in self.arcs), reverse=True))

    @cached_property
    def rnode(self) -> tuple[int, ...]:
        return tuple(sorted((l for _, l in self.arcs), reverse=True))

    @cached_property
    def cflt(self) -> frozenset[Arc]:
        return frozenset(_cflt(self.arcs))

    @cached_property
    def self_nst(self) -> int:
        return nst(self.arcs, self.arcs)

    @cached_property
    def key(self) -> tuple:
        return (self.dimv, self.rnode, self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __contains__(self, arc: object) -> bool:
        return arc in self.arc_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArcSet):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __lt__(self, other: "ArcSet") -> bool:
        if not isinstance(other, ArcSet):
            return NotImplemented
        _same_n(self, other)
        return self.key < other.key

    def __str__(self) -> str:
        return f"n={self.n}:" + ",".join(f"{i}-{l}" for i, l in self.arcs)

    def __repr__(self) -> str:
        return f"ArcSet({str(self)!r})"

    def restrict(self, arcs: Iterable[Arc]) -> "ArcSet":
        """The sub-partition keeping only ``arcs`` (which must belong to self)."""
        keep = tuple(sorted(set(arcs)))
        if not set(keep) <= self.arc_set:
            raise ValueError("restrict() needs a subset of the arcs")
        return ArcSet._trusted(self.n, keep)


def _same_n(a, b) -> None:
    if isinstance(a, ArcSet) and isinstance(b, ArcSet) and a.n != b.n:
        raise ValueError(f"arc sets on different node counts ({a.n} vs {b.n})")


def _arcs_of(x: ArcLike) -> tuple[Arc, ...]:
    return x.arcs if isinstance(x, ArcSet) else tuple(x)


def parse_arc_set(text: str) -> ArcSet:
    """Inverse of ``str(ArcSet)``: ``"n=4:1-4,2-3"`` or ``"n=4:"``."""
    head, sep, body = text.strip().partition(":")
    if not sep or not head.startswith("n="):
        raise ValueError(f"not an arc set string: {text!r}")
    n = int(head[2:])
    arcs = []
    body = body.strip()
    if body:
        for piece in body.split(","):
            i, dash, l = piece.strip().partition("-")
            if not dash:
                raise ValueError(f"bad arc {piece!r} in {text!r}")
            arcs.append((int(i), int(l)))
    return ArcSet(n, tuple(arcs))


# enumeration ----------------------------------------------------------------

def iter_arc_tuples(n: int) -> Iterator[tuple[Arc, ...]]:
    """Yield the sorted arc tuple of every set partition of ``[n]`` (unordered).

    Walks restricted growth strings; the arcs of a block join its consecutive
    elements, so each element only needs to remember the last member of the
    block it joins.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    last = []  # last element seen in each block
    arcs: list[Arc] = []

    def rec(x: int):
        if x > n:
            yield tuple(sorted(arcs))
            return
        for b in range(len(last)):
            prev = last[b]
            arcs.append((prev, x))
            last[b] = x
            yield from rec(x + 1)
            last[b] = prev
            arcs.pop()
        last.append(x)
        yield from rec(x + 1)
        last.pop()

    yield from rec(1)


@lru_cache(maxsize=16)
def _enumerate(n: int) -> tuple[ArcSet, ...]:
    return tuple(sorted(ArcSet._trusted(n, a) for a in iter_arc_tuples(n)))


def enumerate_arc_sets(n: int) -> list[ArcSet]:
    """All set partitions of ``[n]`` in ascending total order (Bell(n) of them)."""
    return list(_enumerate(n))


# statistics -----------------------------------------------------------------

def parts(lam: ArcSet) -> list[frozenset[int]]:
    """Blocks of the set partition, sorted by their smallest element."""
    nxt = dict(lam.arcs)
    starts = set(range(1, lam.n + 1)) - {l for _, l in lam.arcs}
    blocks = []
    for s in sorted(starts):
        block = [s]
        while block[-1] in nxt:
            block.append(nxt[block[-1]])
        blocks.append(frozenset(block))
    return blocks


def arc_count(lam: ArcSet) -> int:
    return len(lam.arcs)


def dim_stat(lam: ArcSet) -> int:
    """Total span ``sum(l - i)`` of the arcs."""
    return lam.dim


def dimv(lam: ArcSet) -> tuple[int, ...]:
    return lam.dimv


def rnode(lam: ArcSet) -> tuple[int, ...]:
    return lam.rnode


def nst(outer: ArcLike, inner: ArcLike) -> int:
    """Number of pairs (``i-l`` in outer, ``j-k`` in inner) with ``i < j < k < l``.

    Either argument may be a plain collection of arcs; only two ``ArcSet``
    arguments are checked for matching ``n``.
    """
    _same_n(outer, inner)
    outer_arcs = _arcs_of(outer)
    inner_arcs = _arcs_of(inner)
    count = 0
    for i, l in outer_arcs:
        for j, k in inner_arcs:
            if i < j and k < l:
                count += 1
    return count


def _cflt(arcs: Iterable[Arc]) -> set[Arc]:
    out = set()
    for i, l in arcs:
        for k in range(i + 1, l):
            out.add((i, k))
        for j in range(i + 1, l):
            out.add((j, l))
    return out


def cflt(lam: ArcSet) -> frozenset[Arc]:
    """Arcs sharing an endpoint with an arc of ``lam`` and strictly inside it."""
    return lam.cflt


def snst(outer: ArcSet, inner: ArcSet) -> int:
    """Nestings of inner arcs under outer arcs, ignoring inner arcs in ``cflt(outer)``."""
    _same_n(outer, inner)
    conflict = outer.cflt
    return nst(outer, [a for a in inner.arcs if a not in conflict])


def is_subset(nu: ArcSet, mu: ArcSet) -> bool:
    _same_n(nu, mu)
    return nu.arc_set <= mu.arc_set


def order_key(lam: ArcSet) -> tuple:
    return lam.key


def total_order_cmp(lam: ArcSet, mu: ArcSet) -> int:
    """-1, 0 or 1 as ``lam`` is below, equal to, or above ``mu``."""
    _same_n(lam, mu)
    a, b = lam.key, mu.key
    return (a > b) - (a < b)
