"""
Graph states: pairs of total successor maps (f0, f1) on a finite node set.

Paths are stored in traversal order. The written string w1 w2 ... wk denotes
f_w1(f_w2(... f_wk(e) ...)), so its traversal order is wk, ..., w2, w1.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from graph_core.errors import EmptyDomain, GraphError, LengthMismatch, OutOfRange, ParseError

NodeId = int
Label = int
Path = Tuple[Label, ...]

LABELS: Tuple[Label, Label] = (0, 1)


@dataclass(frozen=True)
class GraphState:
    """Element of S(M): node count plus the two successor tables."""

    n: int
    succ0: Tuple[NodeId, ...]
    succ1: Tuple[NodeId, ...]

    def __post_init__(self):
        if not _is_index(self.n):
            raise GraphError(f"node count must be an integer, got {self.n!r}")
        if self.n <= 0:
            raise EmptyDomain(f"a state needs at least one node, got n={self.n}")
        for name, table in (("succ0", self.succ0), ("succ1", self.succ1)):
            if len(table) != self.n:
                raise LengthMismatch(f"{name} has {len(table)} entries, expected {self.n}")
            for node, target in enumerate(table):
                if not _is_index(target):
                    raise GraphError(f"{name}[{node}] = {target!r} is not an integer node id")
                if not 0 <= target < self.n:
                    raise OutOfRange(f"{name}[{node}] = {target} is outside 0..{self.n - 1}")

    def successor(self, label: Label, node: NodeId) -> NodeId:
        """f_label(node)."""
        return self.table(label)[node]

    def table(self, label: Label) -> Tuple[NodeId, ...]:
        if label == 0:
            return self.succ0
        if label == 1:
            return self.succ1
        raise GraphError(f"label {label!r} is not 0 or 1")

    def with_edge(self, node: NodeId, label: Label, target: NodeId) -> "GraphState":
        """Copy of the state with the single slot (node, label) redirected to target."""
        if not self.has_node(node):
            raise OutOfRange(f"node {node} is outside 0..{self.n - 1}")
        if self.successor(label, node) == target:
            return self
        table = list(self.table(label))
        table[node] = target
        if label:
            return GraphState(self.n, self.succ0, tuple(table))
        return GraphState(self.n, tuple(table), self.succ1)

    def has_node(self, node: NodeId) -> bool:
        return 0 <= node < self.n


def _is_index(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def make_state(n: int, succ0: Sequence[NodeId], succ1: Sequence[NodeId]) -> GraphState:
    """Build a validated state; raises EmptyDomain, LengthMismatch, OutOfRange or GraphError for non-integers."""
    return GraphState(n, tuple(succ0), tuple(succ1))


def self_loop_state(n: int) -> GraphState:
    """The state where every edge points back at its own node."""
    nodes = tuple(range(n))
    return make_state(n, nodes, nodes)


def resolve(s: GraphState, origin: NodeId, path: Iterable[Label]) -> NodeId:
    """Follow path (traversal order) from origin; the empty path returns origin."""
    if not s.has_node(origin):
        raise OutOfRange(f"node {origin} is outside 0..{s.n - 1}")
    node = origin
    for label in path:
        node = s.successor(label, node)
    return node


def parse_path(written: str) -> Path:
    """Convert a written label string into traversal order."""
    if any(ch not in "01" for ch in written):
        raise ParseError(f"path {written!r} may only contain 0 and 1")
    return tuple(int(ch) for ch in reversed(written))


def written_path(path: Iterable[Label]) -> str:
    """Inverse of parse_path."""
    labels = tuple(path)
    for label in labels:
        if label not in LABELS:
            raise GraphError(f"label {label!r} is not 0 or 1")
    return "".join(str(label) for label in reversed(labels))
