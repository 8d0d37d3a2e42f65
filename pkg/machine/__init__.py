"""
Machine: runs a composition from an initial state to its first fixed point.
"""

from .trace import Trace, TraceEntry, TraceMode
from .runner import (
    DEFAULT_MAX_STEPS,
    DEFAULT_MAX_TRACKED_STATES,
    Cycled,
    Halted,
    RunLimits,
    RunOutcome,
    StepLimit,
    is_comp_fixed,
    outcome_line,
    run,
    trajectory,
)

__all__ = [
    "Trace",
    "TraceEntry",
    "TraceMode",
    "DEFAULT_MAX_STEPS",
    "DEFAULT_MAX_TRACKED_STATES",
    "Cycled",
    "Halted",
    "RunLimits",
    "RunOutcome",
    "StepLimit",
    "is_comp_fixed",
    "outcome_line",
    "run",
    "trajectory",
]
