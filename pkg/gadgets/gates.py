"""
Logic gates built as multiplexers on the conditional embedding.

The input x sits in the cell at b; the m and n positions anchor boolean cells
whose children are private payload nodes (7, 8 under m and 9, 10 under n):

    NOT x    = cond(x, FALSE, TRUE)
    AND x y  = cond(x, y, FALSE)
    OR x y   = cond(x, TRUE, y)

The gate result is the cell anchored at the node the cond readout reaches.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple, Union

from graph_core.codec import encode_text
from graph_core.errors import LengthMismatch
from graph_core.state import GraphState, NodeId, Path, resolve
from gadgets.cells import TruthValue, read_bool
from gadgets.cond import (
    COND_NODES,
    COND_READOUT,
    FIXTURE_LAYOUT,
    avoided_fills,
    build_cond_fixture,
    cond_program,
    core_edges,
    fill_state,
)
from op_engine.program import Composition, apply_composition

logger = logging.getLogger(__name__)

GATE_NODES = COND_NODES + 4
M_PAYLOAD = (7, 8)
N_PAYLOAD = (9, 10)

Inputs = Tuple[bool, ...]
Expected = Union[TruthValue, NodeId]


class GateKind(str, Enum):
    NOT = "not"
    AND = "and"
    OR = "or"
    COND = "cond"


@dataclass(frozen=True)
class GateFixture:
    state: GraphState
    input_anchors: Tuple[NodeId, ...]
    origin: NodeId


@dataclass(frozen=True)
class GateGadget:
    kind: GateKind
    arity: int
    build_fixture: Callable[[Inputs, int], GateFixture]
    program: Composition
    origin: NodeId
    readout: Path
    expected: Callable[[Inputs], Expected]


def _payload(value: bool, anchor: NodeId, children: Tuple[NodeId, NodeId]) -> dict:
    c, d = children
    return {(anchor, 0): c, (anchor, 1): d, (c, 1): c if value else d}


def _mux_fixture(x: bool, m_value: bool, n_value: bool, dontcare_seed: int) -> GraphState:
    layout = FIXTURE_LAYOUT
    fixed = core_edges(layout)
    fixed[(layout.c, 1)] = layout.c if x else layout.d
    fixed.update(_payload(m_value, layout.m, M_PAYLOAD))
    fixed.update(_payload(n_value, layout.n, N_PAYLOAD))
    return fill_state(GATE_NODES, fixed, dontcare_seed, avoided_fills(layout))


def _not_fixture(inputs: Inputs, seed: int) -> GateFixture:
    (x,) = inputs
    state = _mux_fixture(x, False, True, seed)
    return GateFixture(state=state, input_anchors=(FIXTURE_LAYOUT.b,), origin=FIXTURE_LAYOUT.e)


def _and_fixture(inputs: Inputs, seed: int) -> GateFixture:
    x, y = inputs
    state = _mux_fixture(x, y, False, seed)
    return GateFixture(state=state, input_anchors=(FIXTURE_LAYOUT.b, FIXTURE_LAYOUT.m), origin=FIXTURE_LAYOUT.e)


def _or_fixture(inputs: Inputs, seed: int) -> GateFixture:
    x, y = inputs
    state = _mux_fixture(x, True, y, seed)
    return GateFixture(state=state, input_anchors=(FIXTURE_LAYOUT.b, FIXTURE_LAYOUT.n), origin=FIXTURE_LAYOUT.e)


def _cond_fixture(inputs: Inputs, seed: int) -> GateFixture:
    (x,) = inputs
    state, layout = build_cond_fixture(x, seed)
    return GateFixture(state=state, input_anchors=(layout.b,), origin=layout.e)


def build_gate(kind: Union[GateKind, str]) -> GateGadget:
    kind = GateKind(kind)
    common = dict(program=cond_program(), origin=FIXTURE_LAYOUT.e, readout=COND_READOUT)
    if kind is GateKind.NOT:
        return GateGadget(kind, 1, _not_fixture, expected=lambda v: TruthValue.of(not v[0]), **common)
    if kind is GateKind.AND:
        return GateGadget(kind, 2, _and_fixture, expected=lambda v: TruthValue.of(v[0] and v[1]), **common)
    if kind is GateKind.OR:
        return GateGadget(kind, 2, _or_fixture, expected=lambda v: TruthValue.of(v[0] or v[1]), **common)
    layout = FIXTURE_LAYOUT
    return GateGadget(kind, 1, _cond_fixture, expected=lambda v: layout.m if v[0] else layout.n, **common)


def evaluate_gate(g: GateGadget, inputs: Inputs, seed: int) -> Tuple[Expected, GraphState]:
    """Run the gadget program on a fresh fixture; returns (readout, fixture state)."""
    fixture = g.build_fixture(inputs, seed)
    result = apply_composition(fixture.state, g.program)
    node = resolve(result, g.origin, g.readout)
    if g.kind is GateKind.COND:
        return node, fixture.state
    return read_bool(result, node), fixture.state


def gate_fixture_text(kind: Union[GateKind, str], inputs: Inputs, seed: int = 0) -> str:
    """Canonical .pg text of a fresh fixture for the given input row."""
    g = build_gate(kind)
    if len(inputs) != g.arity:
        raise LengthMismatch(f"{g.kind.value} gate takes {g.arity} input(s), got {len(inputs)}")
    return encode_text(g.build_fixture(tuple(inputs), seed).state)


@dataclass(frozen=True)
class RowFailure:
    seed: int
    actual: Expected
    fixture_text: str


@dataclass
class RowResult:
    inputs: Inputs
    expected: Expected
    fills: int = 0
    failures: List[RowFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class GateReport:
    kind: GateKind
    rows: List[RowResult] = field(default_factory=list)

    @property
    def cases_checked(self) -> int:
        return sum(row.fills for row in self.rows)

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(row.passed for row in self.rows)


def verify_gate(g: GateGadget, seeds: int, fills: Optional[List[int]] = None) -> GateReport:
    """Check every input row against `seeds` don't-care fills (seed 0 first)."""
    fill_seeds = fills if fills is not None else list(range(max(1, seeds)))
    report = GateReport(kind=g.kind)
    for inputs in itertools.product((True, False), repeat=g.arity):
        row = RowResult(inputs=inputs, expected=g.expected(inputs))
        for seed in fill_seeds:
            actual, fixture = evaluate_gate(g, inputs, seed)
            row.fills += 1
            if actual != row.expected or actual == TruthValue.INVALID:
                row.failures.append(RowFailure(seed=seed, actual=actual, fixture_text=encode_text(fixture)))
        logger.debug("%s row %s: %d/%d fills ok", g.kind.value, inputs, row.fills - len(row.failures), row.fills)
        report.rows.append(row)
    logger.info("%s gadget: %d cases, %s", g.kind.value, report.cases_checked, "PASS" if report.passed else "FAIL")
    return report
