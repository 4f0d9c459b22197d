"""Orbit finiteness (stability) semi-decision for polynomial maps.

A point is stable under a set of generator maps when its orbit under the
generated monoid (identity included, so the point itself counts) is
finite.  Stability is confirmed two ways:

* singleton generator: cycle detection on the iteration sequence, which
  also yields the (preperiod, period) witness;
* general finite generator sets: breadth-first closure with exact
  point equality, bounded by a point budget and a depth budget.

Instability can never be confirmed, only bounded exploration reported,
so the negative verdict is an honest ``Unknown``, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import cycles
from .dynamics import PolyMapDesc, SparsePoint

__all__ = [
    "Stable",
    "StabilityVerdict",
    "Unknown",
    "enumerate_orbit",
    "is_stable_singleton",
    "orbit_closure",
    "report_line",
]


@dataclass(frozen=True)
class Stable:
    """The explored orbit is finite and closed under every generator."""

    orbit_size: int
    witness: Optional[tuple[int, int]] = None  # (preperiod, period), singleton case

    def __post_init__(self):
        if self.orbit_size < 1:
            raise ValueError("a stable orbit contains at least the start point")


@dataclass(frozen=True)
class Unknown:
    """Exploration hit a limit before the orbit closed."""

    points_explored: int
    budget_hit: str  # "budget" | "max_points" | "max_depth"


StabilityVerdict = Union[Stable, Unknown]


def is_stable_singleton(f: PolyMapDesc, x: SparsePoint, budget: int) -> StabilityVerdict:
    """Stability under a single map, via cycle detection on n -> f(n).

    A Periodic(preperiod, period) verdict means the orbit is exactly the
    preperiod + period distinct points seen before the first revisit.
    """
    if not isinstance(budget, int) or budget < 1:
        raise ValueError("budget must be a positive integer")
    verdict = cycles.detect_hashset(f.apply, x, budget)
    if isinstance(verdict, cycles.Periodic):
        return Stable(
            orbit_size=verdict.preperiod + verdict.period,
            witness=(verdict.preperiod, verdict.period),
        )
    return Unknown(points_explored=budget + 1, budget_hit="budget")


def _explore(generators, x, max_points, max_depth):
    gens = list(generators)
    if not gens:
        raise ValueError("generator set must be nonempty")
    if max_points < 1 or max_depth < 1:
        raise ValueError("exploration limits must be positive")
    visited = {x}
    frontier = [x]
    depth = 0
    while frontier:
        if depth == max_depth:
            return Unknown(points_explored=len(visited), budget_hit="max_depth"), visited
        depth += 1
        next_frontier = []
        for point in frontier:
            for g in gens:
                y = g.apply(point)
                if y not in visited:
                    if len(visited) == max_points:
                        return Unknown(points_explored=len(visited), budget_hit="max_points"), visited
                    visited.add(y)
                    next_frontier.append(y)
        frontier = next_frontier
    return Stable(orbit_size=len(visited)), visited


def orbit_closure(
    generators: Sequence[PolyMapDesc], x: SparsePoint, max_points: int, max_depth: int
) -> StabilityVerdict:
    """Breadth-first closure of {x} under the generators.

    Stable exactly when the frontier empties within the limits; the
    reported orbit size counts x itself (the monoid's identity element).
    """
    verdict, _ = _explore(generators, x, max_points, max_depth)
    return verdict


def enumerate_orbit(
    generators: Sequence[PolyMapDesc], x: SparsePoint, max_points: int, max_depth: int
) -> Optional[frozenset]:
    """The full orbit as a set, or None when a limit fires first."""
    verdict, visited = _explore(generators, x, max_points, max_depth)
    return frozenset(visited) if isinstance(verdict, Stable) else None


def report_line(verdict: StabilityVerdict) -> str:
    if isinstance(verdict, Stable):
        if verdict.witness is not None:
            lam, mu = verdict.witness
            return f"verdict=stable orbit_size={verdict.orbit_size} preperiod={lam} period={mu}"
        return f"verdict=stable orbit_size={verdict.orbit_size}"
    if isinstance(verdict, Unknown):
        return f"verdict=unknown points={verdict.points_explored} limit={verdict.budget_hit}"
    raise TypeError(f"not a stability verdict: {verdict!r}")
