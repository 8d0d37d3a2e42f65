import pytest
from hypothesis import given, settings

from gadgets.cond import cond_program, read_cond_result, FIXTURE_LAYOUT
from graph_core.codec import digest_hex, encode_text
from graph_core.errors import GraphError
from graph_core.state import make_state, self_loop_state
from machine.runner import (
    Cycled,
    Halted,
    RunLimits,
    StepLimit,
    is_comp_fixed,
    outcome_line,
    run,
    trajectory,
)
from machine.trace import TraceMode
from op_engine.ops import is_op_fixed
from op_engine.program import Composition, apply_composition, parse_program
from reports.render import render_trace
from strategies import states_with_program

FLIP = parse_program("0[0 := 10]\n")

# pointer at f0(0) walks 4 -> 1 -> 2 -> 3 -> 1 -> ...
WALK_STATE = make_state(5, [4, 2, 3, 1, 1], [0, 1, 2, 3, 4])
WALK = parse_program("0[0 := 00]\n")


def test_is_comp_fixed_examples(s0, true_fixture):
    assert is_comp_fixed(self_loop_state(3), parse_program("0[01 := 1]\n2[1 := 0110]\n"))
    assert not is_comp_fixed(s0, FLIP)
    after = apply_composition(true_fixture, cond_program())
    assert is_comp_fixed(after, cond_program())


def test_run_halts_immediately_on_fixed_state():
    outcome, _ = run(self_loop_state(2), parse_program("1[0 := 1]\n"))
    assert outcome == Halted(steps=0, final=self_loop_state(2))


def test_run_detects_period_two(s0):
    outcome, _ = run(s0, FLIP)
    assert outcome == Cycled(prefix=0, period=2)


def test_run_cond_fixture_halts_after_one_step(true_fixture):
    outcome, _ = run(true_fixture, cond_program())
    assert isinstance(outcome, Halted)
    assert outcome.steps == 1
    assert read_cond_result(outcome.final, FIXTURE_LAYOUT) == FIXTURE_LAYOUT.m


def test_run_step_limit(s0):
    outcome, _ = run(s0, FLIP, RunLimits(max_steps=1))
    assert outcome == StepLimit(steps=1, last=apply_composition(s0, FLIP))


def test_run_limits_validate():
    with pytest.raises(GraphError):
        RunLimits(max_steps=0)
    assert RunLimits().max_steps == 1_000_000
    assert RunLimits().max_tracked_states == 65_536


@pytest.mark.parametrize("budget", [0, 1, 2, 65_536])
def test_cycle_with_prefix_any_budget(budget):
    outcome, _ = run(WALK_STATE, WALK, RunLimits(max_tracked_states=budget))
    assert outcome == Cycled(prefix=1, period=3)


@pytest.mark.parametrize("budget", [0, 65_536])
def test_period_two_any_budget(s0, budget):
    outcome, _ = run(s0, FLIP, RunLimits(max_tracked_states=budget))
    assert outcome == Cycled(prefix=0, period=2)


def test_cycled_is_confirmed_by_replay():
    outcome, _ = run(WALK_STATE, WALK)
    states = trajectory(WALK_STATE, WALK, outcome.prefix + outcome.period)
    assert states[outcome.prefix] == states[outcome.prefix + outcome.period]
    assert len(set(states[: outcome.prefix + outcome.period])) == outcome.prefix + outcome.period


def test_two_speed_halts_too():
    # pointer walks 3 -> 2 -> 1 -> 1 and halts once f0(0) == f0(f0(0))
    s = make_state(4, [3, 1, 1, 2], [0, 1, 2, 3])
    outcome, _ = run(s, WALK, RunLimits(max_tracked_states=0))
    assert isinstance(outcome, Halted)
    assert outcome.steps == 2
    assert outcome.final.succ0[0] == 1


def test_trace_modes(s0):
    _, none = run(s0, FLIP, trace_mode=TraceMode.NONE)
    assert len(none) == 0
    _, hashed = run(s0, FLIP, trace_mode=TraceMode.HASH)
    assert [(e.step, e.digest, e.state_text) for e in hashed.entries] == [
        (0, "89f356595dfc6d27", None),
        (1, "097e674086b8d450", None),
        (2, "89f356595dfc6d27", None),
    ]


def test_full_trace_golden(true_fixture):
    _, trace = run(true_fixture, cond_program(), trace_mode=TraceMode.FULL)
    assert render_trace(trace) == (
        "step=0 hash=a044e7a8fefe2ea9\n"
        "  nodes 7\n  0 1 2\n  1 3 4\n  2 5 6\n  3 3 3\n  4 4 4\n  5 5 5\n  6 6 6\n"
        "step=1 hash=a7d5e8e64a1b39fd\n"
        "  nodes 7\n  0 1 2\n  1 3 4\n  2 5 6\n  3 3 3\n  4 4 4\n  5 3 5\n  6 4 6\n"
    )


def test_run_is_deterministic(true_fixture):
    first = run(true_fixture, cond_program(), trace_mode=TraceMode.FULL)
    second = run(true_fixture, cond_program(), trace_mode=TraceMode.FULL)
    assert first[0] == second[0]
    assert render_trace(first[1]) == render_trace(second[1])


def test_trajectory_containment_in_two_speed_mode():
    _, trace = run(WALK_STATE, WALK, RunLimits(max_tracked_states=0), TraceMode.FULL)
    states = trajectory(WALK_STATE, WALK, len(trace) - 1)
    assert [e.step for e in trace.entries] == list(range(len(trace)))
    assert [e.state_text for e in trace.entries] == [encode_text(s) for s in states]
    assert [e.digest for e in trace.entries] == [digest_hex(s) for s in states]


@pytest.mark.parametrize(
    "outcome,line",
    [
        (Halted(steps=1, final=self_loop_state(1)), "halted steps=1"),
        (Cycled(prefix=0, period=2), "cycled prefix=0 period=2"),
        (StepLimit(steps=5, last=self_loop_state(1)), "step-limit 5"),
    ],
)
def test_outcome_line(outcome, line):
    assert outcome_line(outcome) == line


@settings(max_examples=200)
@given(states_with_program(max_nodes=5, max_ops=3))
def test_outcomes_are_sound(case):
    s, program = case
    outcome, trace = run(s, program, RunLimits(max_steps=500), TraceMode.FULL)
    if isinstance(outcome, Halted):
        assert is_comp_fixed(outcome.final, program)
    elif isinstance(outcome, Cycled):
        assert outcome.period >= 1
        states = trajectory(s, program, outcome.prefix + outcome.period)
        assert states[outcome.prefix] == states[outcome.prefix + outcome.period]
    states = trajectory(s, program, len(trace) - 1)
    assert [e.state_text for e in trace.entries] == [encode_text(x) for x in states]


@given(states_with_program(max_nodes=4, max_ops=3))
def test_every_op_fixed_implies_composition_fixed(case):
    s, program = case
    if all(is_op_fixed(s, op) for op in program):
        assert is_comp_fixed(s, program)


def test_empty_program_halts_everywhere(s0):
    outcome, _ = run(s0, Composition())
    assert outcome == Halted(steps=0, final=s0)
