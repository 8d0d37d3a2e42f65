"""
Gadgets: boolean cells, the conditional embedding and gates built on it.
"""

from .cells import TruthValue, read_bool, write_bool
from .cond import (
    COND_OPS,
    COND_READOUT,
    FIXTURE_LAYOUT,
    CondLayout,
    build_cond_fixture,
    cond_program,
    read_cond_result,
)
from .gates import (
    GateFixture,
    GateGadget,
    GateKind,
    GateReport,
    RowFailure,
    RowResult,
    build_gate,
    evaluate_gate,
    gate_fixture_text,
    verify_gate,
)

__all__ = [
    "TruthValue",
    "read_bool",
    "write_bool",
    "COND_OPS",
    "COND_READOUT",
    "FIXTURE_LAYOUT",
    "CondLayout",
    "build_cond_fixture",
    "cond_program",
    "read_cond_result",
    "GateFixture",
    "GateGadget",
    "GateKind",
    "GateReport",
    "RowFailure",
    "RowResult",
    "build_gate",
    "evaluate_gate",
    "gate_fixture_text",
    "verify_gate",
]
