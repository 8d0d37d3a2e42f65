"""
Compositions of primitive ops and the ".pop" program format.

Programs list ops in execution order: the composition
T = op_k o ... o op_1 is written as the lines op_1, ..., op_k.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

from graph_core.errors import OriginOutOfRange, ParseError
from graph_core.state import GraphState
from op_engine.ops import PrimitiveOp, apply_op, parse_op, print_op

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Composition:
    """Ordered ops, first element applied first."""

    ops: Tuple[PrimitiveOp, ...] = ()
    # source line of each op when parsed from a program file
    lines: Tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def line_of(self, index: int) -> Optional[int]:
        return self.lines[index] if index < len(self.lines) else None


def from_composition_order(ops: Iterable[PrimitiveOp]) -> Composition:
    """Build from ops listed as written with o (rightmost factor runs first)."""
    return Composition(tuple(reversed(tuple(ops))))


def parse_program(text: str, source: Optional[str] = None) -> Composition:
    ops = []
    lines = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            ops.append(parse_op(stripped))
        except ParseError as e:
            raise e.located(line=lineno, source=source) from e
        lines.append(lineno)
    logger.debug("parsed %d ops from %s", len(ops), source or "<text>")
    return Composition(tuple(ops), tuple(lines))


def print_program(t: Composition) -> str:
    return "".join(f"{print_op(op)}\n" for op in t.ops)


def apply_composition(s: GraphState, t: Composition) -> GraphState:
    """Left fold of apply_op in execution order."""
    for index, op in enumerate(t.ops):
        if not s.has_node(op.origin):
            raise OriginOutOfRange(op.origin, s.n, op_index=index)
        s = apply_op(s, op)
    return s
