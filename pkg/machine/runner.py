"""
The blind machine: iterate a static composition T until the first fixed point.

Non-halting trajectories are reported as cycles (repeat of an earlier state)
or as hitting the step limit. Cycle detection keeps full states up to a
memory budget and then switches to Brent's two-speed search.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from graph_core.codec import state_hash
from graph_core.errors import GraphError
from graph_core.state import GraphState
from machine.trace import Trace, TraceMode
from op_engine.program import Composition, apply_composition

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 1_000_000
DEFAULT_MAX_TRACKED_STATES = 65_536


@dataclass(frozen=True)
class RunLimits:
    max_steps: int = DEFAULT_MAX_STEPS
    max_tracked_states: int = DEFAULT_MAX_TRACKED_STATES

    def __post_init__(self):
        if self.max_steps < 1:
            raise GraphError(f"max_steps must be at least 1, got {self.max_steps}")
        if self.max_tracked_states < 0:
            raise GraphError(f"max_tracked_states must not be negative, got {self.max_tracked_states}")


@dataclass(frozen=True)
class Halted:
    """T(final) == final; steps applications led from the initial state to final."""

    steps: int
    final: GraphState


@dataclass(frozen=True)
class Cycled:
    """state[prefix] == state[prefix + period] with period minimal."""

    prefix: int
    period: int


@dataclass(frozen=True)
class StepLimit:
    steps: int
    last: GraphState


RunOutcome = Union[Halted, Cycled, StepLimit]


def is_comp_fixed(s: GraphState, t: Composition) -> bool:
    return apply_composition(s, t) == s


def trajectory(s0: GraphState, t: Composition, steps: int) -> List[GraphState]:
    """[s0, T(s0), ..., T^steps(s0)]."""
    states = [s0]
    for _ in range(steps):
        states.append(apply_composition(states[-1], t))
    return states


def outcome_line(outcome: RunOutcome) -> str:
    if isinstance(outcome, Halted):
        return f"halted steps={outcome.steps}"
    if isinstance(outcome, Cycled):
        return f"cycled prefix={outcome.prefix} period={outcome.period}"
    return f"step-limit {outcome.steps}"


def _advance(s: GraphState, t: Composition, steps: int) -> GraphState:
    for _ in range(steps):
        s = apply_composition(s, t)
    return s


def _replay_prefix(s0: GraphState, t: Composition, period: int) -> int:
    """Smallest mu with T^mu(s0) == T^(mu+period)(s0)."""
    slow = s0
    fast = _advance(s0, t, period)
    mu = 0
    while slow != fast:
        slow = apply_composition(slow, t)
        fast = apply_composition(fast, t)
        mu += 1
    return mu


def _minimal_period(s: GraphState, t: Composition, upper: int) -> int:
    """Smallest lam <= upper with T^lam(s) == s, for s known to be on the cycle."""
    probe = apply_composition(s, t)
    lam = 1
    while probe != s and lam < upper:
        probe = apply_composition(probe, t)
        lam += 1
    return lam


def _two_speed(
    start: GraphState,
    start_step: int,
    s0: GraphState,
    t: Composition,
    lim: RunLimits,
    trace: Trace,
) -> RunOutcome:
    """Brent's search from start (trajectory index start_step)."""
    power = lam = 1
    tortoise = start
    hare = start
    step = start_step
    while step < lim.max_steps:
        nxt = apply_composition(hare, t)
        if nxt == hare:
            logger.info("halted at step %d during two-speed search", step)
            return Halted(steps=step, final=hare)
        step += 1
        hare = nxt
        trace.record(step, hare)
        if tortoise == hare:
            period = _minimal_period(hare, t, lam)
            prefix = _replay_prefix(s0, t, period)
            logger.info("cycle confirmed by replay: prefix=%d period=%d", prefix, period)
            return Cycled(prefix=prefix, period=period)
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        lam += 1
    return StepLimit(steps=lim.max_steps, last=hare)


def run(
    s0: GraphState,
    t: Composition,
    lim: Optional[RunLimits] = None,
    trace_mode: TraceMode = TraceMode.NONE,
) -> Tuple[RunOutcome, Trace]:
    """Apply T until the first fixed point, a repeated state, or max_steps applications."""
    lim = lim or RunLimits()
    trace = Trace(mode=TraceMode(trace_mode))
    trace.record(0, s0)

    seen: Dict[int, List[int]] = {state_hash(s0): [0]}
    history: List[GraphState] = [s0]
    current = s0
    step = 0
    while step < lim.max_steps:
        nxt = apply_composition(current, t)
        if nxt == current:
            logger.info("halted after %d steps", step)
            return Halted(steps=step, final=current), trace
        step += 1
        current = nxt
        trace.record(step, current)

        digest = state_hash(current)
        logger.debug("step %d digest %016x", step, digest)
        for earlier in seen.get(digest, ()):
            if history[earlier] == current:
                logger.info("cycle detected: prefix=%d period=%d", earlier, step - earlier)
                return Cycled(prefix=earlier, period=step - earlier), trace

        if len(history) < lim.max_tracked_states:
            seen.setdefault(digest, []).append(step)
            history.append(current)
        else:
            logger.warning(
                "tracked %d states without a repeat; switching to two-speed cycle search",
                len(history),
            )
            return _two_speed(current, step, s0, t, lim, trace), trace

    return StepLimit(steps=lim.max_steps, last=current), trace
