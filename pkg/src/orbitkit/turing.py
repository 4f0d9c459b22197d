"""Deterministic single-tape Turing machines on a half-infinite tape.

Machine description format (line-oriented; ``#`` starts a comment):

    states: q0 q1 qa qr        all states, including the halting ones
    input:  0 1                input alphabet (must not contain the blank)
    tape:   0 1 _              tape alphabet (must contain blank and input)
    blank:  _
    start:  q0
    accept: qa
    reject: qr
    q0, 0 -> q1, 1, R          one transition per line: read -> write, move
    q0, 1 -> q0, 1, L

Header lines may appear in any order; each is required exactly once.
States and symbols are arbitrary whitespace-free identifiers.  The
transition table must be total on (non-halting state, tape symbol);
rules sourced at a halting state are ignored, since halting states
absorb.  The head starts on cell 0; moving left from cell 0 leaves the
head in place (the write and state change still happen).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Optional, Sequence, Union

__all__ = [
    "Configuration",
    "Halted",
    "StepOutcome",
    "TMDesc",
    "TmError",
    "TmParseError",
    "TmValidationError",
    "initial_config",
    "make_config",
    "parse_tm",
    "parse_word",
    "step_fn",
    "tape_symbol",
    "tm_step",
    "trajectory",
    "validate_tm",
]


class TmError(ValueError):
    """Base class for Turing machine errors."""


class TmParseError(TmError):
    """Syntax error in a machine description."""


class TmValidationError(TmError):
    """Well-formed text describing an invalid machine."""


@dataclass(frozen=True)
class TMDesc:
    states: frozenset
    input_alphabet: frozenset
    tape_alphabet: frozenset
    blank: str
    transitions: dict  # (state, symbol) -> (state, symbol, "L" | "R")
    start: str
    accept: str
    reject: str


@dataclass(frozen=True)
class Configuration:
    """Machine state, tape contents, and head position.

    ``tape`` is a sorted tuple of (cell, symbol) pairs holding only
    non-blank cells, so equality and hashing agree with semantic tape
    equality.
    """

    state: str
    tape: tuple
    head: int


@dataclass(frozen=True)
class Halted:
    accepting: bool


StepOutcome = Union[Configuration, Halted]


def make_config(state: str, tape: Mapping[int, str], head: int, blank: str) -> Configuration:
    """Normalize a tape mapping into a Configuration (blanks dropped)."""
    if head < 0:
        raise TmError(f"head position must be a natural number, got {head}")
    cells = []
    for cell, symbol in tape.items():
        if cell < 0:
            raise TmError(f"tape cell must be a natural number, got {cell}")
        if symbol != blank:
            cells.append((cell, symbol))
    return Configuration(state=state, tape=tuple(sorted(cells)), head=head)


def tape_symbol(config: Configuration, cell: int, blank: str) -> str:
    for c, s in config.tape:
        if c == cell:
            return s
    return blank


def validate_tm(m: TMDesc) -> None:
    """Check the structural invariants; raises TmValidationError."""
    if m.accept == m.reject:
        raise TmValidationError("accept and reject states must differ")
    for role in ("start", "accept", "reject"):
        q = getattr(m, role)
        if q not in m.states:
            raise TmValidationError(f"{role} state '{q}' is not a declared state")
    if m.blank not in m.tape_alphabet:
        raise TmValidationError(f"blank symbol '{m.blank}' must be in the tape alphabet")
    if m.blank in m.input_alphabet:
        raise TmValidationError("the blank symbol may not be in the input alphabet")
    for s in m.input_alphabet:
        if s not in m.tape_alphabet:
            raise TmValidationError(f"input symbol '{s}' missing from the tape alphabet")
    for (q, s), (q2, s2, move) in m.transitions.items():
        for state in (q, q2):
            if state not in m.states:
                raise TmValidationError(f"rule references unknown state '{state}'")
        for sym in (s, s2):
            if sym not in m.tape_alphabet:
                raise TmValidationError(f"rule references unknown symbol '{sym}'")
        if move not in ("L", "R"):
            raise TmValidationError(f"rule move must be L or R, got '{move}'")
    halting = {m.accept, m.reject}
    for q in m.states:
        if q in halting:
            continue
        for s in m.tape_alphabet:
            if (q, s) not in m.transitions:
                raise TmValidationError(f"transition missing for state '{q}' reading '{s}'")


_HEADER_KEYS = ("states", "input", "tape", "blank", "start", "accept", "reject")


def parse_tm(text: str) -> TMDesc:
    """Parse and validate a machine description (format in module docstring)."""
    headers: dict[str, list[str]] = {}
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip() in _HEADER_KEYS:
            name = key.strip()
            if name in headers:
                raise TmParseError(f"duplicate header '{name}:' (line {lineno})")
            headers[name] = rest.split()
            continue
        if "->" in line:
            left, right = line.split("->", 1)
            lparts = [t.strip() for t in left.split(",")]
            rparts = [t.strip() for t in right.split(",")]
            if len(lparts) != 2 or len(rparts) != 3 or not all(lparts + rparts):
                raise TmParseError(
                    f"malformed rule (line {lineno}): expected \"state, symbol -> state, symbol, L|R\""
                )
            rules.append((lineno, lparts[0], lparts[1], rparts[0], rparts[1], rparts[2]))
            continue
        raise TmParseError(f"unrecognized line {lineno}: {raw.strip()!r}")

    for name in _HEADER_KEYS:
        if name not in headers:
            raise TmParseError(f"missing '{name}:' header")
    for name in ("blank", "start", "accept", "reject"):
        if len(headers[name]) != 1:
            raise TmParseError(f"header '{name}:' must name exactly one token")

    accept = headers["accept"][0]
    reject = headers["reject"][0]
    transitions: dict[tuple[str, str], tuple[str, str, str]] = {}
    for lineno, q, s, q2, s2, move in rules:
        if (q, s) in transitions:
            raise TmParseError(f"duplicate rule for ('{q}', '{s}') (line {lineno})")
        transitions[(q, s)] = (q2, s2, move)
    # halting states absorb; their rows are dropped after duplicate checking
    transitions = {k: v for k, v in transitions.items() if k[0] not in (accept, reject)}

    m = TMDesc(
        states=frozenset(headers["states"]),
        input_alphabet=frozenset(headers["input"]),
        tape_alphabet=frozenset(headers["tape"]),
        blank=headers["blank"][0],
        transitions=transitions,
        start=headers["start"][0],
        accept=accept,
        reject=reject,
    )
    validate_tm(m)
    return m


def parse_word(text: str, m: TMDesc) -> list[str]:
    """Interpret CLI input text as a word over the input alphabet.

    Whitespace-separated tokens are taken as symbols; a single unbroken
    token that is not itself a symbol is split into characters.
    """
    text = text.strip()
    if not text:
        return []
    tokens = text.split()
    if len(tokens) > 1 or tokens[0] in m.input_alphabet:
        return tokens
    if all(ch in m.input_alphabet for ch in tokens[0]):
        return list(tokens[0])
    raise TmError(f"cannot read {text!r} as a word over the input alphabet")


def initial_config(m: TMDesc, word: Sequence[str]) -> Configuration:
    """Start state, word on the leftmost cells, head on cell 0."""
    for symbol in word:
        if symbol not in m.input_alphabet:
            raise TmError(f"input symbol '{symbol}' is not in the input alphabet")
    return make_config(m.start, dict(enumerate(word)), 0, m.blank)


def tm_step(m: TMDesc, c: Configuration) -> StepOutcome:
    """One transition; halting states absorb regardless of tape and head."""
    if c.state not in m.states:
        raise TmError(f"corrupt configuration: unknown state '{c.state}'")
    if c.state == m.accept or c.state == m.reject:
        return Halted(accepting=c.state == m.accept)
    read = tape_symbol(c, c.head, m.blank)
    state, write, move = m.transitions[(c.state, read)]
    tape = dict(c.tape)
    if write == m.blank:
        tape.pop(c.head, None)
    else:
        tape[c.head] = write
    head = c.head + 1 if move == "R" else max(c.head - 1, 0)
    return Configuration(state=state, tape=tuple(sorted(tape.items())), head=head)


def trajectory(m: TMDesc, word: Sequence[str]) -> Iterator[Configuration]:
    """Lazy configuration sequence; ends at the halting configuration if reached."""
    c = initial_config(m, word)
    while True:
        yield c
        outcome = tm_step(m, c)
        if isinstance(outcome, Halted):
            return
        c = outcome


def step_fn(m: TMDesc) -> Callable[[Configuration], Optional[Configuration]]:
    """Adapter for cycle detection: returns None once the machine halts."""

    def step(c: Configuration) -> Optional[Configuration]:
        outcome = tm_step(m, c)
        return None if isinstance(outcome, Halted) else outcome

    return step
