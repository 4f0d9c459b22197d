"""Command-line surface wiring the toolkit into reproducible experiments.

Subcommands:

* ``life step|run``   evolve an RLE pattern with the set-based engine
* ``poly-rule``       print the local update-rule polynomial and its checks
* ``tm run|periodicity``  simulate a Turing machine / classify its trajectory
* ``orbit check``     stability of a point under one or more polynomial maps
* ``verify``          differential test: polynomial map vs. grid engine

Reports are ``key=value`` lines on stdout, one logical result per line.
Stdout is byte-deterministic for fixed inputs and seed; the wall-time
line goes to stderr.  Every file argument accepts ``-`` for stdin.

Exit codes: 0 = a verdict was produced (Unknown included), 1 = input
error, 2 = internal invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import random
import sys
import time
from pathlib import Path

from . import cycles, dynamics, life, lifepoly, orbit, turing
from .dynamics import FiniteComponentMap, GridRuleMap
from .polymap import PolyParseError, parse_poly

__all__ = ["InternalCheckError", "main", "parse_component_map"]


class CliInputError(ValueError):
    pass


class InternalCheckError(RuntimeError):
    """An invariant the toolkit guarantees failed at runtime."""


_INPUT_ERRORS = (
    OSError,
    CliInputError,
    PolyParseError,
    dynamics.PointParseError,
    dynamics.MalformedPointError,
    life.RleParseError,
    lifepoly.OutOfQuadrantError,
    lifepoly.NotAConfigurationError,
    turing.TmError,
)


class _Parser(argparse.ArgumentParser):
    # usage problems are input errors (exit 1), not internal failures
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_text(path: str) -> tuple[str, str]:
    """Read a file (or stdin for ``-``) and return (text, digest report line)."""
    if path == "-":
        data = sys.stdin.read()
        name = "<stdin>"
    else:
        data = Path(path).read_text()
        name = path
    digest = hashlib.sha256(data.encode()).hexdigest()
    return data, f"input={name} sha256={digest}"


def _bbox_str(config) -> str:
    box = life.bounding_box(config)
    return "empty" if box is None else ",".join(str(v) for v in box)


def parse_component_map(text: str) -> FiniteComponentMap:
    """Parse a component-map file: ``coordinate: polynomial`` lines.

    Polynomials use the standard text format; ``#`` starts a comment.
    """
    components = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        coord_text, sep, poly_text = line.partition(":")
        if not sep:
            raise CliInputError(f"component line {lineno} needs 'coordinate: polynomial'")
        try:
            coord = int(coord_text.strip())
        except ValueError:
            raise CliInputError(f"bad coordinate {coord_text.strip()!r} on line {lineno}") from None
        if coord < 0:
            raise CliInputError(f"coordinate on line {lineno} must be a natural number")
        if coord in components:
            raise CliInputError(f"duplicate coordinate {coord} on line {lineno}")
        components[coord] = parse_poly(poly_text)
    return FiniteComponentMap(components)


def cmd_life(args) -> int:
    text, digest = _read_text(args.pattern)
    config = life.parse_rle(text)
    print(f"command={args.command}")
    print(digest)
    current = config
    for k in range(1, args.steps + 1):
        current = life.step(current)
        if args.trace:
            print(f"step={k} population={len(current)} bbox={_bbox_str(current)}")
    print(f"steps={args.steps} population={len(current)} bbox={_bbox_str(current)}")
    if args.grid:
        box = life.bounding_box(current)
        print(f"origin={box[0]},{box[1]}" if box else "origin=none")
        print(life.render(current))
    rle = life.emit_rle(current)
    if args.out != "-":
        Path(args.out).write_text(rle + "\n")
        print(f"out={args.out}")
    else:
        print(rle)
    return 0


def cmd_poly_rule(args) -> int:
    rule = lifepoly.build_local_rule()
    patterns = lifepoly.life_patterns()
    print("command=poly-rule")
    for bits in itertools.product((0, 1), repeat=9):
        if rule.evaluate(bits) != lifepoly.evaluate_pattern_sum(bits):
            raise InternalCheckError("expanded and un-expanded rule forms disagree")
    if args.expanded:
        print(f"terms={len(rule.terms)}")
        print(f"rule={rule.to_text()}")
    else:
        print(f"summands={len(patterns)}")
        print(f"rule={lifepoly.pattern_sum_text()}")
    print("truth_table=ok")
    probe = (0, 1, 1, 1, 0, 0, 0, 0, 0)
    print(f"probe={','.join(map(str, probe))} value={rule.evaluate(probe)}")
    return 0


def _tape_str(config, m) -> str:
    last = config.head
    if config.tape:
        last = max(last, config.tape[-1][0])
    return ",".join(turing.tape_symbol(config, i, m.blank) for i in range(last + 1))


def cmd_tm(args) -> int:
    text, digest = _read_text(args.machine)
    m = turing.parse_tm(text)
    word = turing.parse_word(args.input, m)
    print(f"command={args.command}")
    print(digest)
    if args.subcommand == "run":
        truncated = False
        last = None
        steps = 0
        for k, c in enumerate(turing.trajectory(m, word)):
            if k > args.budget:
                truncated = True
                break
            print(f"step={k} state={c.state} head={c.head} tape={_tape_str(c, m)}")
            last, steps = c, k
        if truncated:
            print(f"result=truncated steps={args.budget}")
        elif last.state == m.accept or last.state == m.reject:
            verdict = "accept" if last.state == m.accept else "reject"
            print(f"result=halted verdict={verdict} steps={steps}")
        else:  # generator is infinite unless it halts, so this cannot happen
            raise InternalCheckError("trajectory ended in a non-halting state")
        return 0
    detect = cycles.detect_brent if args.algorithm == "brent" else cycles.detect_hashset
    start = turing.initial_config(m, word)
    verdict = detect(turing.step_fn(m), start, args.budget, args.halt_as_fixed_point)
    flag = "true" if args.halt_as_fixed_point else "false"
    print(f"algorithm={args.algorithm} budget={args.budget} halt_as_fixed_point={flag}")
    print(cycles.report_line(verdict))
    return 0


def cmd_orbit(args) -> int:
    print(f"command={args.command}")
    extra_lines = []
    if args.point is not None:
        if args.translate:
            raise CliInputError("--translate only applies to --encode")
        text, digest = _read_text(args.point)
        print(digest)
        point = dynamics.parse_point(text)
    else:
        text, digest = _read_text(args.encode)
        print(digest)
        config = life.parse_rle(text)
        if args.translate:
            config = life.translate(config, args.translate[0], args.translate[1])
        safe = "true" if lifepoly.quadrant_safe(config) else "false"
        extra_lines.append(f"quadrant_safe={safe}")
        point = lifepoly.encode(config)
    maps = []
    for spec in args.map:
        if spec == "gol":
            maps.append(lifepoly.build_gol_map())
        else:
            text, digest = _read_text(spec)
            print(digest)
            maps.append(parse_component_map(text))
    for line in extra_lines:
        print(line)
    print(f"generators={len(maps)} support={len(point)}")
    if len(maps) == 1 and not args.closure:
        print(f"budget={args.max_steps}")
        verdict = orbit.is_stable_singleton(maps[0], point, args.max_steps)
    else:
        print(f"max_points={args.max_points} max_depth={args.max_depth}")
        verdict = orbit.orbit_closure(maps, point, args.max_points, args.max_depth)
    print(orbit.report_line(verdict))
    return 0


def _corrupted_rule():
    # negative control: forget every survival-on-2 pattern
    rule = lifepoly.build_local_rule()
    for bits in lifepoly.life_patterns():
        if bits[0] == 1 and sum(bits[1:]) == 2:
            rule = rule - lifepoly.pattern_term(bits)
    return rule


def cmd_verify(args) -> int:
    print(f"command={args.command}")
    print(f"trials={args.trials} size={args.size} density={args.density} seed={args.seed}")
    rule = _corrupted_rule() if args.corrupt else lifepoly.build_local_rule()
    gol = GridRuleMap(rule, lifepoly.cantor_pairing())
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        soup = life.random_soup(rng, args.size, args.density, origin=(1, 1))
        expected = life.step(soup)
        try:
            got = lifepoly.decode(gol.apply(lifepoly.encode(soup)))
        except (lifepoly.NotAConfigurationError, dynamics.MalformedPointError):
            failures += 1
            continue
        if got != expected:
            failures += 1
    print(f"failures={failures} passes={args.trials - failures}")
    return 0 if failures == 0 else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="orbitkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    life_p = sub.add_parser("life", help="evolve RLE patterns with the set-based engine")
    life_sub = life_p.add_subparsers(dest="subcommand", required=True)
    for name in ("step", "run"):
        sp = life_sub.add_parser(name, help=f"{name} a pattern")
        sp.add_argument("pattern", help="RLE pattern file ('-' for stdin)")
        if name == "run":
            sp.add_argument("--steps", type=int, default=1, help="generations to advance")
        sp.add_argument("--out", default="-", help="write the evolved RLE here (default stdout)")
        sp.add_argument("--trace", action="store_true", help="print population/bbox per step")
        sp.add_argument("--grid", action="store_true", help="print a #/. grid with its origin")
        sp.set_defaults(func=cmd_life, command=f"life {name}", steps=1)

    pr = sub.add_parser("poly-rule", help="print the local update-rule polynomial")
    pr.add_argument("--expanded", action="store_true", help="canonical expanded form")
    pr.set_defaults(func=cmd_poly_rule, command="poly-rule")

    tm_p = sub.add_parser("tm", help="Turing machine simulation and periodicity")
    tm_sub = tm_p.add_subparsers(dest="subcommand", required=True)
    for name in ("run", "periodicity"):
        sp = tm_sub.add_parser(name)
        sp.add_argument("machine", help="machine description file ('-' for stdin)")
        sp.add_argument("--input", default="", help="input word (symbols or characters)")
        sp.add_argument("--budget", type=int, default=10000, help="step budget")
        if name == "periodicity":
            sp.add_argument("--algorithm", choices=("hashset", "brent"), default="hashset")
            sp.add_argument("--halt-as-fixed-point", action="store_true",
                            help="report a halt as a period-1 cycle")
        sp.set_defaults(func=cmd_tm, command=f"tm {name}")

    ob = sub.add_parser("orbit", help="orbit finiteness of a point under polynomial maps")
    ob_sub = ob.add_subparsers(dest="subcommand", required=True)
    oc = ob_sub.add_parser("check")
    src = oc.add_mutually_exclusive_group(required=True)
    src.add_argument("--point", help="sparse point file in index:value format")
    src.add_argument("--encode", help="RLE pattern file to encode as a point")
    oc.add_argument("--translate", nargs=2, type=int, metavar=("DX", "DY"),
                    help="translate the pattern before encoding")
    oc.add_argument("--map", action="append", required=True,
                    help="'gol' or a component-map file; repeat for several generators")
    oc.add_argument("--closure", action="store_true",
                    help="force breadth-first closure even for a single map")
    oc.add_argument("--max-steps", type=int, default=10000, help="singleton cycle budget")
    oc.add_argument("--max-points", type=int, default=100000, help="closure point budget")
    oc.add_argument("--max-depth", type=int, default=10000, help="closure depth budget")
    oc.set_defaults(func=cmd_orbit, command="orbit check")

    vf = sub.add_parser("verify", help="random differential test of map vs. engine")
    vf.add_argument("--trials", type=int, default=1000)
    vf.add_argument("--size", type=int, default=16)
    vf.add_argument("--density", type=float, default=0.3)
    vf.add_argument("--seed", type=int, default=42)
    vf.add_argument("--corrupt", action="store_true",
                    help="negative control: run with a deliberately broken rule")
    vf.set_defaults(func=cmd_verify, command="verify")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        code = args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    finally:
        elapsed = (time.perf_counter() - started) * 1000
        print(f"walltime_ms={elapsed:.1f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
