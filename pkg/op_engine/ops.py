"""
Primitive graph operations e[b0 b1 ... bn := a1 ... am].

The op redirects the b0-labelled edge of B = f_b1(...f_bn(e)...) to
A = f_a1(...f_am(e)...). Both A and B are resolved in the state before the
write.

Written strings put the first traversed label on the right. Reading them left
to right with the assigned label last gives a different op: "0[01 := 100]"
would then mean node0.left.right = node0.right.left.left, which is not what
this module does.
"""

import re
from dataclasses import dataclass
from typing import Tuple

from graph_core.errors import EmptyTarget, GraphError, OriginOutOfRange, ParseError
from graph_core.state import LABELS, GraphState, Label, NodeId, Path, parse_path, resolve, written_path

_OP = re.compile(r"\s*([0-9]+)\s*\[\s*([0-9]*)\s*:=\s*([0-9]*)\s*\]\s*")


@dataclass(frozen=True)
class PrimitiveOp:
    """One rewrite; target_path and source_path are in traversal order."""

    origin: NodeId
    assigned_label: Label
    target_path: Path = ()
    source_path: Path = ()

    def __post_init__(self):
        if self.origin < 0:
            raise GraphError(f"origin must be a node index, got {self.origin}")
        if self.assigned_label not in LABELS:
            raise GraphError(f"assigned label must be 0 or 1, got {self.assigned_label!r}")
        for label in self.target_path + self.source_path:
            if label not in LABELS:
                raise GraphError(f"path label must be 0 or 1, got {label!r}")

    @property
    def target_written(self) -> str:
        """The b-string b0 b1 ... bn as written."""
        return f"{self.assigned_label}{written_path(self.target_path)}"

    @property
    def source_written(self) -> str:
        return written_path(self.source_path)

    def __str__(self) -> str:
        return print_op(self)


def parse_op(text: str) -> PrimitiveOp:
    """Parse `node '[' bits ':=' bits? ']'`."""
    match = _OP.fullmatch(text)
    if match is None:
        raise ParseError(f"malformed op {text.strip()!r}")
    origin, left, right = match.groups()
    for bits in (left, right):
        if any(ch not in "01" for ch in bits):
            raise ParseError(f"labels must be 0 or 1 in {text.strip()!r}")
    if not left:
        raise EmptyTarget(f"op {text.strip()!r} has no assigned label")
    return PrimitiveOp(
        origin=int(origin),
        assigned_label=int(left[0]),
        target_path=parse_path(left[1:]),
        source_path=parse_path(right),
    )


def print_op(op: PrimitiveOp) -> str:
    source = op.source_written
    if source:
        return f"{op.origin}[{op.target_written} := {source}]"
    return f"{op.origin}[{op.target_written} :=]"


def _check_origin(s: GraphState, op: PrimitiveOp) -> None:
    if not s.has_node(op.origin):
        raise OriginOutOfRange(op.origin, s.n)


def op_endpoints(s: GraphState, op: PrimitiveOp) -> Tuple[NodeId, NodeId]:
    """(B, A) resolved in s."""
    _check_origin(s, op)
    return resolve(s, op.origin, op.target_path), resolve(s, op.origin, op.source_path)


def edge_delta(s: GraphState, op: PrimitiveOp) -> Tuple[NodeId, Label, NodeId, NodeId]:
    """The slot the op writes: (node, label, old target, new target)."""
    b, a = op_endpoints(s, op)
    return b, op.assigned_label, s.successor(op.assigned_label, b), a


def apply_op(s: GraphState, op: PrimitiveOp) -> GraphState:
    b, a = op_endpoints(s, op)
    return s.with_edge(b, op.assigned_label, a)


def is_op_fixed(s: GraphState, op: PrimitiveOp) -> bool:
    """f_b0(B) == A, which holds exactly when apply_op(s, op) == s."""
    b, a = op_endpoints(s, op)
    return s.successor(op.assigned_label, b) == a
