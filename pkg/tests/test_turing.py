from itertools import islice

import pytest

from orbitkit.turing import (
    Configuration,
    Halted,
    TmError,
    TmParseError,
    TmValidationError,
    initial_config,
    make_config,
    parse_tm,
    parse_word,
    step_fn,
    tape_symbol,
    tm_step,
    trajectory,
)

STAY_LEFT_LOOPER = """
# writes the blank and pushes left forever; the edge clamp pins it in place
states: q qa qr
input: 0
tape: 0 _
blank: _
start: q
accept: qa
reject: qr
q, 0 -> q, _, L
q, _ -> q, _, L
"""

RIGHT_MOVER = """
states: q qa qr
input: 0
tape: 0 _
blank: _
start: q
accept: qa
reject: qr
q, 0 -> q, 0, R
q, _ -> q, _, R
"""

ACCEPT_ON_START = """
states: qa qr
input:
tape: _
blank: _
start: qa
accept: qa
reject: qr
"""

TWO_STATE_LOOPER = """
states: a b qa qr
input: 0
tape: 0 _
blank: _
start: a
accept: qa
reject: qr
a, 0 -> b, 0, R
a, _ -> b, _, R
b, 0 -> a, 0, L
b, _ -> a, _, L
"""

WRITER = """
states: q p qa qr
input: 0 1
tape: 0 1 _
blank: _
start: q
accept: qa
reject: qr
q, 0 -> p, 1, L
q, 1 -> qa, 1, R
q, _ -> qa, _, R
p, 0 -> qa, 0, R
p, 1 -> qa, 1, R
p, _ -> qa, _, R
"""


def test_parse_two_state_looper():
    m = parse_tm(TWO_STATE_LOOPER)
    assert m.states == frozenset({"a", "b", "qa", "qr"})
    assert m.start == "a" and m.accept == "qa" and m.reject == "qr"
    assert m.blank == "_"
    assert m.transitions[("a", "0")] == ("b", "0", "R")
    assert len(m.transitions) == 4


def test_initial_config_empty_word():
    m = parse_tm(RIGHT_MOVER)
    c = initial_config(m, [])
    assert c == Configuration(state="q", tape=(), head=0)


def test_initial_config_places_word_left():
    m = parse_tm(WRITER)
    c = initial_config(m, ["0", "1"])
    assert c.tape == ((0, "0"), (1, "1"))
    assert c.head == 0 and c.state == "q"


def test_initial_config_rejects_blank_in_word():
    m = parse_tm(WRITER)
    with pytest.raises(TmError):
        initial_config(m, ["0", "_"])


def test_halting_state_absorbs():
    m = parse_tm(ACCEPT_ON_START)
    out = tm_step(m, initial_config(m, []))
    assert out == Halted(accepting=True)
    # regardless of tape and head
    weird = make_config("qa", {5: "_"}, 3, m.blank)
    assert tm_step(m, weird) == Halted(accepting=True)


def test_left_edge_clamp_keeps_write_and_state_change():
    m = parse_tm(WRITER)
    out = tm_step(m, initial_config(m, ["0"]))
    assert isinstance(out, Configuration)
    assert out.head == 0  # attempted to move left from cell 0
    assert out.state == "p"
    assert tape_symbol(out, 0, m.blank) == "1"


def test_right_mover_single_step():
    m = parse_tm(RIGHT_MOVER)
    out = tm_step(m, initial_config(m, []))
    assert out == Configuration(state="q", tape=(), head=1)


def test_step_rejects_unknown_state():
    m = parse_tm(RIGHT_MOVER)
    with pytest.raises(TmError):
        tm_step(m, Configuration(state="ghost", tape=(), head=0))


def test_trajectory_accept_on_start_has_length_one():
    m = parse_tm(ACCEPT_ON_START)
    assert [c.state for c in trajectory(m, [])] == ["qa"]


def test_trajectory_right_mover_heads_increase():
    m = parse_tm(RIGHT_MOVER)
    configs = list(islice(trajectory(m, []), 50))
    assert [c.head for c in configs] == list(range(50))
    assert len(set(configs)) == 50


def test_trajectory_stay_left_is_constant_after_first_step():
    m = parse_tm(STAY_LEFT_LOOPER)
    configs = list(islice(trajectory(m, []), 5))
    assert configs[1] == configs[2] == configs[3] == configs[4]
    assert configs[0] == configs[1]  # already at the fixed point on empty input


def test_trajectory_includes_halting_configuration():
    m = parse_tm(WRITER)
    configs = list(trajectory(m, ["1"]))
    assert configs[-1].state == m.accept
    assert len(configs) == 2


def test_step_fn_signals_termination_with_none():
    m = parse_tm(WRITER)
    step = step_fn(m)
    c = initial_config(m, ["1"])
    nxt = step(c)
    assert nxt is not None and nxt.state == "qa"
    assert step(nxt) is None


def test_tape_locality():
    m = parse_tm(TWO_STATE_LOOPER)
    configs = list(islice(trajectory(m, ["0", "0", "0"]), 20))
    for a, b in zip(configs, configs[1:]):
        assert abs(a.head - b.head) <= 1
        changed = set(dict(a.tape).items()) ^ set(dict(b.tape).items())
        assert len({cell for cell, _ in changed}) <= 1


def test_determinism():
    m = parse_tm(TWO_STATE_LOOPER)
    c = initial_config(m, ["0"])
    assert tm_step(m, c) == tm_step(m, c)


def test_configuration_normalization_drops_blanks():
    a = make_config("q", {0: "0", 1: "_", 7: "_"}, 0, "_")
    b = make_config("q", {0: "0"}, 0, "_")
    assert a == b
    assert hash(a) == hash(b)


def test_make_config_validates_positions():
    with pytest.raises(TmError):
        make_config("q", {-1: "0"}, 0, "_")
    with pytest.raises(TmError):
        make_config("q", {}, -2, "_")


def test_parse_word():
    m = parse_tm(WRITER)
    assert parse_word("", m) == []
    assert parse_word("0 1 0", m) == ["0", "1", "0"]
    assert parse_word("010", m) == ["0", "1", "0"]
    with pytest.raises(TmError):
        parse_word("02", m)


def test_parser_requires_totality_and_names_the_pair():
    text = TWO_STATE_LOOPER.replace("b, _ -> a, _, L\n", "")
    with pytest.raises(TmValidationError) as exc:
        parse_tm(text)
    assert "'b'" in str(exc.value) and "'_'" in str(exc.value)


def test_parser_rejects_duplicate_rule():
    text = TWO_STATE_LOOPER + "a, 0 -> a, 0, L\n"
    with pytest.raises(TmParseError) as exc:
        parse_tm(text)
    assert "duplicate" in str(exc.value)


def test_parser_rejects_unknown_references():
    with pytest.raises(TmValidationError):
        parse_tm(TWO_STATE_LOOPER.replace("a, 0 -> b, 0, R", "a, 0 -> zz, 0, R"))
    with pytest.raises(TmValidationError):
        parse_tm(TWO_STATE_LOOPER.replace("a, 0 -> b, 0, R", "a, 0 -> b, 9, R"))
    with pytest.raises(TmValidationError):
        parse_tm(TWO_STATE_LOOPER.replace("start: a", "start: zz"))


def test_parser_rejects_equal_halting_states():
    text = ACCEPT_ON_START.replace("reject: qr", "reject: qa")
    with pytest.raises(TmValidationError) as exc:
        parse_tm(text)
    assert "differ" in str(exc.value)


def test_parser_rejects_blank_in_input_alphabet():
    text = ACCEPT_ON_START.replace("input:", "input: _")
    with pytest.raises(TmValidationError):
        parse_tm(text)


def test_parser_rejects_missing_headers_and_bad_lines():
    with pytest.raises(TmParseError):
        parse_tm("states: q qa qr\n")
    with pytest.raises(TmParseError):
        parse_tm(ACCEPT_ON_START + "not a rule line\n")
    with pytest.raises(TmParseError):
        parse_tm(ACCEPT_ON_START + "q, 0 -> q, 0\n")
    with pytest.raises(TmParseError):
        parse_tm(ACCEPT_ON_START + "blank: x\n")


def test_halting_state_rules_are_ignored():
    text = TWO_STATE_LOOPER + "qa, 0 -> a, 0, L\n"
    m = parse_tm(text)
    assert ("qa", "0") not in m.transitions
    assert tm_step(m, make_config("qa", {}, 0, "_")) == Halted(accepting=True)
