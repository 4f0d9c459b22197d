"""Finitely supported integer points and finitely described polynomial maps.

Points live on natural-number coordinates and are zero almost everywhere.
Two map families describe every self-map the toolkit needs:

* :class:`FiniteComponentMap` rewrites finitely many coordinates with
  polynomials and leaves every other coordinate untouched.
* :class:`GridRuleMap` lifts a local rule on a 3x3 planar neighborhood to
  the whole coordinate axis through a pairing bijection between quadrant
  cells and coordinate indexes.  Every coordinate is computed by the
  rule, so the rule must send the all-zero neighborhood to 0; that keeps
  images finitely supported and is checked at construction.

Everything here is an immutable value and every operation is pure, so
points and maps are safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Union

from .polymap import Polynomial, constant

__all__ = [
    "FiniteComponentMap",
    "GridRuleMap",
    "MalformedPointError",
    "NEIGHBOR_OFFSETS",
    "PairingSpec",
    "PointParseError",
    "PolyMapDesc",
    "SparsePoint",
    "apply",
    "emit_point",
    "iterate",
    "parse_point",
]

# Offsets of the eight neighbors of a planar cell, row-major with the y
# axis growing downward (matching RLE row order): NW N NE W E SW S SE.
# Local rule variables: x0 = center, x1..x8 = NEIGHBOR_OFFSETS in order.
NEIGHBOR_OFFSETS = ((-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1))
_OFFSETS9 = ((0, 0),) + NEIGHBOR_OFFSETS


class PointParseError(ValueError):
    """Raised when sparse-point text does not match the ``index:value`` format."""


class MalformedPointError(ValueError):
    """Raised when a grid-rule map meets a coordinate outside its pairing's image."""


class SparsePoint:
    """Immutable finitely-supported map from natural coordinates to integers.

    Unlisted coordinates read as 0; zero values are never stored, so
    equality and hashing agree with the function the point denotes.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        data: dict[int, int] = {}
        if entries is not None:
            items = entries.items() if isinstance(entries, Mapping) else entries
            for coord, value in items:
                if not isinstance(coord, int) or coord < 0:
                    raise ValueError(f"coordinate must be a natural number, got {coord!r}")
                if not isinstance(value, int):
                    raise ValueError(f"value must be an integer, got {value!r}")
                if value:
                    data[coord] = value
        self._entries = data
        self._hash = None

    def get(self, coord: int, default: int = 0) -> int:
        return self._entries.get(coord, default)

    def __getitem__(self, coord: int) -> int:
        return self._entries.get(coord, 0)

    def items(self):
        return self._entries.items()

    def support(self) -> frozenset:
        return frozenset(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoint):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self._entries.items()))
        return h

    def __repr__(self) -> str:
        return f"SparsePoint({emit_point(self)!r})"


def emit_point(point: SparsePoint) -> str:
    """Render ``index:value`` tokens with strictly increasing indices."""
    return " ".join(f"{i}:{v}" for i, v in sorted(point.items()))


_TOKEN_RE = re.compile(r"^(\d+):(-?\d+)$")


def parse_point(text: str) -> SparsePoint:
    """Parse whitespace-separated ``index:value`` tokens, in any order.

    Rejects duplicate indices and explicit zero values.
    """
    entries: dict[int, int] = {}
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise PointParseError(f"bad token {token!r}, expected 'index:value'")
        coord, value = int(m.group(1)), int(m.group(2))
        if value == 0:
            raise PointParseError(f"zero value for coordinate {coord} is not stored")
        if coord in entries:
            raise PointParseError(f"duplicate coordinate {coord}")
        entries[coord] = value
    return SparsePoint(entries)


@dataclass(frozen=True)
class PairingSpec:
    """A named bijection between quadrant cells (a, b) and coordinate indexes.

    ``inverse`` must raise :class:`ValueError` for indexes outside the
    image of ``forward``.
    """

    name: str
    forward: Callable[[int, int], int] = field(compare=False)
    inverse: Callable[[int], tuple[int, int]] = field(compare=False)


class FiniteComponentMap:
    """Polynomial map with finitely many non-identity components.

    Coordinates absent from the component table behave as projections
    x_i -> x_i.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Mapping[int, Union[Polynomial, int]]):
        table: dict[int, Polynomial] = {}
        for coord, poly in components.items():
            if not isinstance(coord, int) or coord < 0:
                raise ValueError(f"component coordinate must be a natural number, got {coord!r}")
            if isinstance(poly, int):
                poly = constant(poly)
            if not isinstance(poly, Polynomial):
                raise ValueError(f"component for coordinate {coord} must be a Polynomial")
            table[coord] = poly
        self._components = table

    @property
    def components(self) -> Mapping[int, Polynomial]:
        return MappingProxyType(self._components)

    def apply(self, x: SparsePoint) -> SparsePoint:
        entries = dict(x.items())
        for coord, poly in self._components.items():
            v = poly.evaluate(x)
            if v:
                entries[coord] = v
            else:
                entries.pop(coord, None)
        return SparsePoint(entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {p}" for i, p in sorted(self._components.items()))
        return f"<FiniteComponentMap {{{body}}}>"


class GridRuleMap:
    """Shift-invariant local rule lifted to the coordinate axis via a pairing.

    Application evaluates the rule at every quadrant cell within Chebyshev
    distance 1 of the point's unpaired support (the only cells where the
    result can be nonzero, by the zero-at-zero check); neighbors outside
    the quadrant read as constant 0.
    """

    __slots__ = ("_rule", "_pairing", "_cache")

    def __init__(self, rule: Polynomial, pairing: PairingSpec):
        if rule.evaluate({}) != 0:
            raise ValueError("local rule must send the all-zero neighborhood to 0")
        high = [v for v in rule.support_vars() if v > 8]
        if high:
            raise ValueError(f"local rule may only use variables x0..x8, found x{min(high)}")
        self._rule = rule
        self._pairing = pairing
        self._cache: dict[tuple, int] = {}

    @property
    def rule(self) -> Polynomial:
        return self._rule

    @property
    def pairing(self) -> PairingSpec:
        return self._pairing

    def apply(self, x: SparsePoint) -> SparsePoint:
        inverse = self._pairing.inverse
        forward = self._pairing.forward
        cells: dict[tuple[int, int], int] = {}
        for idx, value in x.items():
            try:
                cell = inverse(idx)
            except ValueError as exc:
                raise MalformedPointError(
                    f"coordinate {idx} is not in the image of pairing '{self._pairing.name}'"
                ) from exc
            cells[cell] = value
        candidates = set()
        for a, b in cells:
            for da, db in _OFFSETS9:
                ca, cb = a + da, b + db
                if ca >= 0 and cb >= 0:
                    candidates.add((ca, cb))
        out: dict[int, int] = {}
        cache = self._cache
        rule = self._rule
        read = cells.get
        for a, b in candidates:
            key = tuple(read((a + da, b + db), 0) for da, db in _OFFSETS9)
            v = cache.get(key)
            if v is None:
                v = rule.evaluate(key)
                if len(cache) >= 1 << 16:
                    cache.clear()
                cache[key] = v
            if v:
                out[forward(a, b)] = v
        return SparsePoint(out)

    def __repr__(self) -> str:
        return f"<GridRuleMap pairing={self._pairing.name} rule_terms={len(self._rule.terms)}>"


PolyMapDesc = Union[FiniteComponentMap, GridRuleMap]


def apply(m: PolyMapDesc, x: SparsePoint) -> SparsePoint:
    """Apply a finitely described polynomial map to a point."""
    return m.apply(x)


def iterate(m: PolyMapDesc, x: SparsePoint, n: int) -> SparsePoint:
    """n-fold application; ``iterate(m, x, 0)`` is ``x``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("iteration count must be a non-negative integer")
    for _ in range(n):
        x = m.apply(x)
    return x
