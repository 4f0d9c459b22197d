"""Sparse Conway's Game of Life on the unbounded plane, with RLE pattern I/O.

A configuration is a frozenset of live cells ``(x, y)`` on the full
integer lattice; x grows rightward, y grows downward (RLE row order).
Stepping only examines live cells and their neighbors, since a birth
needs three live neighbors and nothing else can change state.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Iterator

__all__ = [
    "Cell",
    "LifeConfig",
    "RleParseError",
    "bounding_box",
    "emit_rle",
    "make_config",
    "neighbor_count",
    "neighbors",
    "parse_rle",
    "random_soup",
    "render",
    "run",
    "step",
    "translate",
]

Cell = tuple  # (x, y)
LifeConfig = frozenset  # of Cell

_STEPS = ((-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1))


class RleParseError(ValueError):
    """RLE syntax error carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def make_config(cells: Iterable) -> LifeConfig:
    out = set()
    for cell in cells:
        x, y = cell
        if not isinstance(x, int) or not isinstance(y, int):
            raise ValueError(f"cell coordinates must be integers, got {cell!r}")
        out.add((x, y))
    return frozenset(out)


def neighbors(cell: Cell) -> Iterator[Cell]:
    x, y = cell
    for dx, dy in _STEPS:
        yield (x + dx, y + dy)


def neighbor_count(config: LifeConfig, cell: Cell) -> int:
    """Number of live cells among the 8 neighbors; the cell itself is excluded."""
    return sum(n in config for n in neighbors(cell))


def step(config: LifeConfig) -> LifeConfig:
    """One generation: birth on 3 live neighbors, survival on 2 or 3."""
    counts = Counter()
    for x, y in config:
        for dx, dy in _STEPS:
            counts[(x + dx, y + dy)] += 1
    return frozenset(c for c, n in counts.items() if n == 3 or (n == 2 and c in config))


def run(config: LifeConfig, n: int) -> LifeConfig:
    if not isinstance(n, int) or n < 0:
        raise ValueError("step count must be a non-negative integer")
    for _ in range(n):
        config = step(config)
    return config


def translate(config: LifeConfig, dx: int, dy: int) -> LifeConfig:
    return frozenset((x + dx, y + dy) for x, y in config)


def bounding_box(config: LifeConfig):
    """(min_x, min_y, max_x, max_y) of the live set, or None when empty."""
    if not config:
        return None
    xs = [x for x, _ in config]
    ys = [y for _, y in config]
    return (min(xs), min(ys), max(xs), max(ys))


def random_soup(rng, size: int, density: float, origin: Cell = (0, 0)) -> LifeConfig:
    """Random size x size soup; each cell is live with probability ``density``."""
    ox, oy = origin
    return frozenset(
        (ox + x, oy + y) for y in range(size) for x in range(size) if rng.random() < density
    )


_HEADER_RE = re.compile(r"^x\s*=\s*(\d+)\s*,\s*y\s*=\s*(\d+)\s*(?:,\s*rule\s*=\s*\S+\s*)?$")


def parse_rle(text: str) -> LifeConfig:
    """Parse run-length-encoded pattern text.

    Accepts the community dialect: ``#`` comment lines, a header
    ``x = <w>, y = <h>`` (a trailing ``rule = ...`` clause is ignored),
    runs of ``b``/``o``/``$``, and a ``!`` terminator after which the
    rest of the input is ignored.  The pattern is anchored so its first
    row and column are 0.
    """
    lines = text.splitlines()
    header_at = None
    for i, raw in enumerate(lines):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if not _HEADER_RE.match(s):
            raise RleParseError(f"malformed header {s!r}", i + 1, 1)
        header_at = i
        break
    if header_at is None:
        raise RleParseError("missing header line", max(len(lines), 1), 1)

    cells = set()
    x = y = count = 0
    has_count = False
    for li in range(header_at + 1, len(lines)):
        line = lines[li]
        if line.lstrip().startswith("#"):
            continue
        for ci, ch in enumerate(line):
            if ch.isdigit():
                count = count * 10 + int(ch)
                has_count = True
            elif ch == "b":
                x += count if has_count else 1
                count, has_count = 0, False
            elif ch == "o":
                n = count if has_count else 1
                for k in range(n):
                    cells.add((x + k, y))
                x += n
                count, has_count = 0, False
            elif ch == "$":
                y += count if has_count else 1
                x = 0
                count, has_count = 0, False
            elif ch == "!":
                if has_count:
                    raise RleParseError("run count before terminator", li + 1, ci + 1)
                return frozenset(cells)
            elif ch.isspace():
                continue
            else:
                raise RleParseError(f"unknown symbol {ch!r}", li + 1, ci + 1)
    raise RleParseError("missing '!' terminator", len(lines), len(lines[-1]) + 1 if lines else 1)


def emit_rle(config: LifeConfig) -> str:
    """Encode a configuration, translated to its bounding-box origin.

    The empty configuration encodes as ``x = 0, y = 0`` with a bare
    terminator.  Body lines wrap at 70 characters.
    """
    if not config:
        return "x = 0, y = 0\n!"
    x0, y0, x1, y1 = bounding_box(config)
    width, height = x1 - x0 + 1, y1 - y0 + 1

    rows: dict[int, list[int]] = {}
    for x, y in config:
        rows.setdefault(y - y0, []).append(x - x0)

    def tok(n: int, ch: str) -> str:
        return ch if n == 1 else f"{n}{ch}"

    tokens = []
    prev_row = 0
    for row in sorted(rows):
        if row > prev_row:
            tokens.append(tok(row - prev_row, "$"))
        cursor = 0
        xs = sorted(rows[row])
        i = 0
        while i < len(xs):
            j = i
            while j + 1 < len(xs) and xs[j + 1] == xs[j] + 1:
                j += 1
            if xs[i] > cursor:
                tokens.append(tok(xs[i] - cursor, "b"))
            tokens.append(tok(j - i + 1, "o"))
            cursor = xs[j] + 1
            i = j + 1
        prev_row = row
    tokens.append("!")

    body_lines = []
    line: list[str] = []
    length = 0
    for t in tokens:
        if length + len(t) > 70 and line:
            body_lines.append("".join(line))
            line, length = [], 0
        line.append(t)
        length += len(t)
    body_lines.append("".join(line))
    return f"x = {width}, y = {height}\n" + "\n".join(body_lines)


def render(config: LifeConfig) -> str:
    """``#``/``.`` grid clipped to the bounding box."""
    if not config:
        return "(empty)"
    x0, y0, x1, y1 = bounding_box(config)
    return "\n".join(
        "".join("#" if (x, y) in config else "." for x in range(x0, x1 + 1))
        for y in range(y0, y1 + 1)
    )
