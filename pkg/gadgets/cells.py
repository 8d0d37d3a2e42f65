"""
Boolean cells: a truth value stored at an anchor node b with c = f0(b).

True when f1(c) == c, false when f1(c) == f1(b). If c == f1(b) both
equations coincide and the cell is Invalid.
"""

from enum import Enum

from graph_core.errors import AmbiguousCell
from graph_core.state import GraphState, NodeId


class TruthValue(str, Enum):
    TRUE = "true"
    FALSE = "false"
    INVALID = "invalid"

    @classmethod
    def of(cls, value: bool) -> "TruthValue":
        return cls.TRUE if value else cls.FALSE


def read_bool(s: GraphState, anchor: NodeId) -> TruthValue:
    c = s.successor(0, anchor)
    d = s.successor(1, anchor)
    if c == d:
        return TruthValue.INVALID
    tail = s.successor(1, c)
    if tail == c:
        return TruthValue.TRUE
    if tail == d:
        return TruthValue.FALSE
    return TruthValue.INVALID


def write_bool(s: GraphState, anchor: NodeId, value: bool) -> GraphState:
    """Redirect the single edge (f0(anchor), 1)."""
    c = s.successor(0, anchor)
    d = s.successor(1, anchor)
    if c == d:
        raise AmbiguousCell(f"cell at node {anchor} has f0 == f1 == {c}")
    return s.with_edge(c, 1, c if value else d)
