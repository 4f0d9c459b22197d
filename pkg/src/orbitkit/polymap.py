"""Sparse multivariate polynomial arithmetic over the integers.

A polynomial is stored canonically: a dict from monomials to nonzero
integer coefficients, where a monomial is a tuple of ``(variable,
exponent)`` pairs sorted by variable index with every exponent positive.
The empty tuple is the constant monomial.  Two polynomials are equal
exactly when their canonical term maps are equal, and hashing respects
that, so polynomials work as dict keys and set members.

Coefficients and evaluation use Python's arbitrary-precision integers,
so iterating polynomial maps never overflows or rounds.

Text format (round-trippable): terms sorted by total degree, then by
variable index, e.g. ``-1*x0^2*x1 + 3*x4 + 2``.
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Iterable, Mapping, Union

__all__ = [
    "Monomial",
    "Polynomial",
    "PolyParseError",
    "constant",
    "parse_poly",
    "variable",
]

# ((var, exp), ...) sorted by var, every exp > 0; () is the constant monomial
Monomial = tuple


class PolyParseError(ValueError):
    """Raised when polynomial text does not match the term grammar."""


def _normalize_monomial(pairs: Iterable[tuple[int, int]]) -> Monomial:
    merged: dict[int, int] = {}
    for var, exp in pairs:
        if not isinstance(var, int) or var < 0:
            raise ValueError(f"variable index must be a natural number, got {var!r}")
        if not isinstance(exp, int) or exp < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exp!r}")
        if exp:
            merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for var, exp in b:
        out[var] = out.get(var, 0) + exp
    return tuple(sorted(out.items()))


class Polynomial:
    """Immutable sparse polynomial in variables x0, x1, ... over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: dict[Monomial, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                if not isinstance(coeff, int):
                    raise ValueError(f"coefficient must be an integer, got {coeff!r}")
                key = _normalize_monomial(mono)
                c = data.get(key, 0) + coeff
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        self._terms = data
        self._hash = None

    @classmethod
    def _raw(cls, data: dict) -> "Polynomial":
        # data must already be canonical (normalized keys, no zero coefficients)
        p = cls.__new__(cls)
        p._terms = data
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        """Read-only view of the canonical monomial -> coefficient map."""
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self._terms.items()))
        return h

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = data.get(mono, 0) + coeff
            if c:
                data[mono] = c
            else:
                data.pop(mono, None)
        return Polynomial._raw(data)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _merge_monomials(m1, m2)
                c = data.get(m, 0) + c1 * c2
                if c:
                    data[m] = c
                else:
                    data.pop(m, None)
        return Polynomial._raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, assignment) -> int:
        """Evaluate at an assignment: a mapping var -> int (missing vars read
        as 0) or a sequence indexed by variable number."""
        if isinstance(assignment, (list, tuple)):
            assignment = dict(enumerate(assignment))
        get = assignment.get
        total = 0
        for mono, coeff in self._terms.items():
            v = coeff
            for var, exp in mono:
                base = get(var, 0)
                if not base:
                    v = 0
                    break
                if base != 1:
                    v *= base ** exp if exp > 1 else base
            total += v
        return total

    def substitute(self, mapping: Mapping[int, Union["Polynomial", int]]) -> "Polynomial":
        """Replace mapped variables by polynomials; unmapped variables stand
        for themselves.  Evaluating the result equals evaluating ``self`` on
        the pointwise-evaluated substitutions."""
        subs: dict[int, Polynomial] = {}
        for var, repl in mapping.items():
            if not isinstance(var, int) or var < 0:
                raise ValueError(f"substituted variable must be a natural number, got {var!r}")
            p = _coerce(repl)
            if p is NotImplemented:
                raise ValueError(f"substitution for x{var} must be a Polynomial or int")
            subs[var] = p
        total = Polynomial._raw({})
        for mono, coeff in self._terms.items():
            term = constant(coeff)
            for var, exp in mono:
                base = subs.get(var)
                if base is None:
                    term = term * Polynomial._raw({((var, exp),): 1})
                else:
                    term = term * base**exp
            total = total + term
        return total

    def support_vars(self) -> frozenset:
        """Variables occurring with positive exponent in some term."""
        return frozenset(var for mono in self._terms for var, _ in mono)

    def total_degree(self) -> int:
        """Largest total degree among terms (0 for the zero polynomial)."""
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def to_text(self) -> str:
        """Canonical text: terms by descending total degree, then variable order."""
        if not self._terms:
            return "0"

        def order(item):
            mono, _ = item
            return (-sum(e for _, e in mono), tuple((v, -e) for v, e in mono))

        rendered = []
        for mono, coeff in sorted(self._terms.items(), key=order):
            body = "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in mono)
            rendered.append((coeff, body))
        coeff, body = rendered[0]
        parts = [f"{coeff}*{body}" if body else str(coeff)]
        for coeff, body in rendered[1:]:
            sign = " + " if coeff >= 0 else " - "
            mag = abs(coeff)
            parts.append(sign + (f"{mag}*{body}" if body else str(mag)))
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"<Polynomial {self.to_text()}>"


def variable(index: int) -> Polynomial:
    """The polynomial x<index>."""
    return Polynomial([(((index, 1),), 1)])


def constant(value: int) -> Polynomial:
    """The constant polynomial."""
    return Polynomial([((), value)])


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return constant(value)
    return NotImplemented


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str) -> Polynomial:
    """Parse the text format emitted by :meth:`Polynomial.to_text`.

    Accepts terms in any order and tolerates flexible whitespace around
    ``+``, ``-``, and ``*``.
    """
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial text")
    # every '-' becomes '+-', so after splitting on '+' a '-' can only lead a chunk
    chunks = s.replace("-", "+-").split("+")
    terms = []
    for pos, chunk in enumerate(chunks):
        chunk = chunk.strip()
        if not chunk:
            follows_negative = pos + 1 < len(chunks) and chunks[pos + 1].lstrip().startswith("-")
            if pos == 0 or follows_negative:
                continue  # leading minus, or an explicit "+ -c*..." term
            raise PolyParseError(f"empty term in {text.strip()!r}")
        negative = chunk.startswith("-")
        if negative:
            chunk = chunk[1:].strip()
            if not chunk:
                raise PolyParseError(f"dangling sign in {text.strip()!r}")
        coeff = 1
        pairs = []
        for i, raw in enumerate(chunk.split("*")):
            token = raw.strip()
            if not token:
                raise PolyParseError(f"empty factor in term {chunk!r}")
            if token.isdigit():
                if i != 0:
                    raise PolyParseError(f"coefficient must lead its term: {chunk!r}")
                coeff = int(token)
                continue
            m = _FACTOR_RE.match(token)
            if not m:
                raise PolyParseError(f"bad factor {token!r} in term {chunk!r}")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
        terms.append((tuple(pairs), -coeff if negative else coeff))
    return Polynomial(terms)
