"""Shared test data and independent reference implementations."""

BLINKER = frozenset({(0, 0), (1, 0), (2, 0)})
BLOCK = frozenset({(0, 0), (1, 0), (0, 1), (1, 1)})
GLIDER = frozenset({(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)})
TOAD = frozenset({(1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1)})
BEEHIVE = frozenset({(1, 0), (2, 0), (0, 1), (3, 1), (1, 2), (2, 2)})
TUB = frozenset({(1, 0), (0, 1), (2, 1), (1, 2)})

BLINKER_RLE = "x = 3, y = 1\n3o!"
BLOCK_RLE = "x = 2, y = 2\n2o$2o!"
GLIDER_RLE = "x = 3, y = 3\nbob$2bo$3o!"
TOAD_RLE = "x = 4, y = 2\nb3o$3o!"
EMPTY_RLE = "x = 0, y = 0\n!"


def dense_step(cells):
    """Reference Life step on a dense padded array; independent of the
    sparse engine and of the polynomial construction."""
    if not cells:
        return frozenset()
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    w, h = x1 - x0 + 1, y1 - y0 + 1
    grid = [[0] * w for _ in range(h)]
    for x, y in cells:
        grid[y - y0][x - x0] = 1
    out = set()
    for gy in range(h):
        for gx in range(w):
            n = 0
            for dy in (-1, 0, 1):
                for dx in (-1, 0, 1):
                    if dx == 0 and dy == 0:
                        continue
                    yy, xx = gy + dy, gx + dx
                    if 0 <= yy < h and 0 <= xx < w:
                        n += grid[yy][xx]
            if n == 3 or (n == 2 and grid[gy][gx]):
                out.add((gx + x0, gy + y0))
    return frozenset(out)


def rho_step(preperiod, period):
    """Step function of the canonical rho sequence on 0, 1, 2, ...:
    a tail of `preperiod` states feeding a cycle of `period` states."""
    total = preperiod + period

    def step(n):
        n += 1
        return preperiod if n == total else n

    return step


def terminating_step(length):
    """Step function of a finite chain 0 -> 1 -> ... -> length, then stop."""

    def step(n):
        return None if n >= length else n + 1

    return step
