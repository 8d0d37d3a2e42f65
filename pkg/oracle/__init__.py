"""
Oracle: brute-force checks of the machine against the defining equations.
"""

from .naive import follow, naive_apply, naive_fixed
from .sweeps import (
    ConverseWitness,
    OpText,
    Report,
    SweepBounds,
    Violation,
    check_fixed_construction,
    check_fixed_point_iff,
    check_fixed_point_iff_sampled,
    check_postconditions,
    check_postconditions_sampled,
    enumerate_op_texts,
    enumerate_ops,
    enumerate_states,
    find_converse_witness,
    random_cases,
    run_all_checks,
)

__all__ = [
    "follow",
    "naive_apply",
    "naive_fixed",
    "ConverseWitness",
    "OpText",
    "Report",
    "SweepBounds",
    "Violation",
    "check_fixed_construction",
    "check_fixed_point_iff",
    "check_fixed_point_iff_sampled",
    "check_postconditions",
    "check_postconditions_sampled",
    "enumerate_op_texts",
    "enumerate_ops",
    "enumerate_states",
    "find_converse_witness",
    "random_cases",
    "run_all_checks",
]
