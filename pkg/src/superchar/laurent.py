"""Exact Laurent polynomials in one indeterminate ``q`` over the integers.

Values are immutable and kept in canonical form (no zero coefficients), so
equality is equality of the term maps.  Coefficients are Python ints and
never overflow.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "Q",
    "T",
    "monomial",
    "t_power",
    "parse_laurent",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[q, q^-1] stored as a sparse ``{exponent: coefficient}`` map."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls._raw({0: value} if value else {})
        raise TypeError(f"cannot convert {type(value).__name__} to LaurentPoly")

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True iff no exponent is negative (the value lies in Z[q])."""
        return all(e >= 0 for e in self._terms)

    def is_inverse_polynomial(self) -> bool:
        """True iff no exponent is positive (the value lies in Z[q^-1])."""
        return all(e <= 0 for e in self._terms)

    # ring operations -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentPoly":
        return self

    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({e + ea: c * ca for e, c in b.items()})
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in Z[q, q^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only monomials with coefficient +-1 are invertible")
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # evaluation and rendering -------------------------------------------

    def eval(self, q0: int | Fraction) -> int | Fraction:
        """Substitute ``q = q0`` exactly.

        Returns an ``int`` when every exponent is nonnegative and ``q0`` is an
        int, otherwise a ``Fraction``.
        """
        if q0 == 0:
            if any(e < 0 for e in self._terms):
                raise ZeroDivisionError("negative power of q evaluated at q = 0")
            return self._terms.get(0, 0)
        if isinstance(q0, int) and self.is_polynomial():
            return sum(c * q0**e for e, c in self._terms.items())
        q0 = Fraction(q0)
        return sum((c * q0**e for e, c in self._terms.items()), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, e in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if i == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        """JSON form: exponent and coefficient both as decimal strings."""
        return {str(e): str(self._terms[e]) for e in sorted(self._terms, reverse=True)}

    @classmethod
    def from_json(cls, obj: Mapping[str, str | int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})
T = LaurentPoly._raw({1: 1, 0: -1})


def monomial(coeff: int, exp: int) -> LaurentPoly:
    """``coeff * q**exp``."""
    return LaurentPoly._raw({exp: coeff} if coeff else {})


@lru_cache(maxsize=None)
def t_power(k: int) -> LaurentPoly:
    """``(q - 1)**k`` expanded by the binomial theorem."""
    if k < 0:
        raise ValueError("t_power needs k >= 0")
    return LaurentPoly._raw({i: comb(k, i) * (-1) ** (k - i) for i in range(k + 1)})


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<q1>q)(?:\s*\^\s*(?P<e1>-?\d+))?)?
          | (?P<q2>q)(?:\s*\^\s*(?P<e2>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the rendering produced by ``str(LaurentPoly)``.

    Accepts terms such as ``3``, ``q``, ``q^-2``, ``5*q^4`` joined by ``+``
    or ``-``, with arbitrary whitespace.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("q2") is None):
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            if m.group("q1"):
                e = int(m.group("e1")) if m.group("e1") is not None else 1
            else:
                e = 0
        else:
            c = 1
            e = int(m.group("e2")) if m.group("e2") is not None else 1
        terms[e] = terms.get(e, 0) + sign * c
        pos = m.end()
    return LaurentPoly(terms)
