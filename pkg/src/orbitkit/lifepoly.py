"""Conway's Game of Life realized as a polynomial map on integer sequences.

The construction: for each 3x3 neighborhood pattern whose center is alive
in the next generation, build the degree-9 product of ``x_i`` (live bit)
and ``1 - x_i`` (dead bit) factors, which is 1 exactly on that pattern
among 0/1 inputs.  Summing the 140 qualifying products gives one local
rule polynomial whose value on any 0/1 neighborhood is the center's next
state.  A pairing bijection between quadrant cells and natural numbers
then turns grid configurations into finitely supported 0/1 points and a
grid generation into one application of a :class:`~orbitkit.dynamics.GridRuleMap`.

Variable order is fixed as x0 = center and x1..x8 = the neighbors in
row-major order (NW N NE W E SW S SE, y growing downward).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import isqrt
from typing import Sequence

from . import life
from .dynamics import GridRuleMap, PairingSpec, SparsePoint
from .life import LifeConfig
from .polymap import Polynomial, constant, variable

__all__ = [
    "NotAConfigurationError",
    "OutOfQuadrantError",
    "Pattern9",
    "build_gol_map",
    "build_local_rule",
    "cantor_pairing",
    "decode",
    "encode",
    "evaluate_pattern_sum",
    "life_patterns",
    "pair",
    "pattern_factors",
    "pattern_product_text",
    "pattern_sum_text",
    "pattern_term",
    "quadrant_safe",
    "unpair",
]

Pattern9 = tuple  # nine 0/1 entries, center first


class OutOfQuadrantError(ValueError):
    """A live cell has a negative coordinate and cannot be encoded."""


class NotAConfigurationError(ValueError):
    """A point holds a value other than 0/1 and is not an encoded configuration."""


def _check_pattern(bits) -> Pattern9:
    bits = tuple(bits)
    if len(bits) != 9 or any(b not in (0, 1) for b in bits):
        raise ValueError(f"pattern must be nine 0/1 entries, got {bits!r}")
    return bits


def _next_center(bits: Pattern9) -> int:
    alive = sum(bits[1:])
    if bits[0]:
        return 1 if alive in (2, 3) else 0
    return 1 if alive == 3 else 0


@lru_cache(maxsize=1)
def life_patterns() -> tuple[Pattern9, ...]:
    """The 140 neighborhood patterns whose center is alive next generation."""
    return tuple(bits for bits in product((0, 1), repeat=9) if _next_center(bits))


def pattern_factors(bits) -> tuple[Polynomial, ...]:
    """The nine affine factors of a pattern's indicator product."""
    bits = _check_pattern(bits)
    return tuple(variable(i) if b else constant(1) - variable(i) for i, b in enumerate(bits))


def pattern_term(bits) -> Polynomial:
    """Indicator polynomial: 1 exactly on ``bits`` among the 512 0/1 inputs."""
    term = constant(1)
    for factor in pattern_factors(bits):
        term = term * factor
    return term


def pattern_product_text(bits) -> str:
    bits = _check_pattern(bits)
    return "*".join(f"x{i}" if b else f"(1-x{i})" for i, b in enumerate(bits))


def pattern_sum_text() -> str:
    """The un-expanded rule: 140 degree-9 products joined by ``+``."""
    return " + ".join(pattern_product_text(p) for p in life_patterns())


def evaluate_pattern_sum(values: Sequence[int]) -> int:
    """Evaluate the un-expanded 140-product form directly, factor by factor.

    Independent of the expanded canonical polynomial; used to cross-check it.
    """
    total = 0
    for bits in life_patterns():
        prod = 1
        for bit, v in zip(bits, values):
            prod *= v if bit else 1 - v
            if prod == 0:
                break
        total += prod
    return total


@lru_cache(maxsize=1)
def build_local_rule() -> Polynomial:
    """Expanded canonical sum of the 140 pattern indicators.

    Construction cross-checks the expansion against the un-expanded
    product form on all 512 0/1 neighborhoods.
    """
    rule = Polynomial.zero()
    for bits in life_patterns():
        rule = rule + pattern_term(bits)
    for bits in product((0, 1), repeat=9):
        if rule.evaluate(bits) != evaluate_pattern_sum(bits):
            raise RuntimeError("expanded local rule disagrees with its pattern sum")
    return rule


def pair(a: int, b: int) -> int:
    """Cantor pairing (a + b)(a + b + 1)/2 + b, a bijection from quadrant cells
    to natural numbers."""
    if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
        raise ValueError(f"pair arguments must be natural numbers, got {(a, b)!r}")
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(n: int) -> tuple[int, int]:
    """Exact inverse of :func:`pair`."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"unpair argument must be a natural number, got {n!r}")
    s = (isqrt(8 * n + 1) - 1) // 2
    b = n - s * (s + 1) // 2
    return (s - b, b)


@lru_cache(maxsize=1)
def cantor_pairing() -> PairingSpec:
    return PairingSpec(name="cantor", forward=pair, inverse=unpair)


def encode(config: LifeConfig) -> SparsePoint:
    """Flatten a quadrant-contained configuration to a 0/1 point."""
    entries = {}
    for x, y in config:
        if x < 0 or y < 0:
            raise OutOfQuadrantError(f"live cell ({x}, {y}) has a negative coordinate")
        entries[pair(x, y)] = 1
    return SparsePoint(entries)


def decode(point: SparsePoint) -> LifeConfig:
    """Inverse of :func:`encode`; rejects points with values outside {0, 1}."""
    cells = set()
    for idx, value in point.items():
        if value != 1:
            raise NotAConfigurationError(f"coordinate {idx} holds {value}, not a cell state")
        cells.add(unpair(idx))
    return frozenset(cells)


@lru_cache(maxsize=1)
def build_gol_map() -> GridRuleMap:
    """The global map: local rule plus Cantor pairing.

    One application on an encoded configuration equals one engine
    generation, provided the configuration is :func:`quadrant_safe`.
    """
    return GridRuleMap(build_local_rule(), cantor_pairing())


def quadrant_safe(config: LifeConfig) -> bool:
    """True when the grid step and the polynomial map provably agree: all
    live cells sit at coordinates >= 1 (so nothing reads or writes across
    the quadrant boundary) and the next generation stays in the quadrant."""
    if not all(x >= 1 and y >= 1 for x, y in config):
        return False
    return all(x >= 0 and y >= 0 for x, y in life.step(config))
