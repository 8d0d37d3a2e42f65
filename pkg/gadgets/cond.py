"""
The conditional embedding.

With p = f0(e), b = f1(e), m = f0(p), n = f1(p), c = f0(b), d = f1(b) and a
boolean cell at b, running e[011 := 10] and then e[001 := 00] leaves m (true)
or n (false) at g0(g1(g0(g1(e)))).
"""

import random
from dataclasses import dataclass
from typing import Dict, List, Tuple

from graph_core.state import GraphState, Label, NodeId, Path, make_state, resolve
from op_engine.ops import parse_op
from op_engine.program import Composition

COND_NODES = 7
COND_OPS = ("0[011 := 10]", "0[001 := 00]")

# g0(g1(g0(g1(e)))) in traversal order
COND_READOUT: Path = (1, 0, 1, 0)

Slot = Tuple[NodeId, Label]


@dataclass(frozen=True)
class CondLayout:
    e: NodeId
    p: NodeId
    b: NodeId
    c: NodeId
    d: NodeId
    m: NodeId
    n: NodeId

    @classmethod
    def from_state(cls, s: GraphState, e: NodeId) -> "CondLayout":
        p, b = s.successor(0, e), s.successor(1, e)
        return cls(
            e=e,
            p=p,
            b=b,
            c=s.successor(0, b),
            d=s.successor(1, b),
            m=s.successor(0, p),
            n=s.successor(1, p),
        )

    def nodes(self) -> Tuple[NodeId, ...]:
        return (self.e, self.p, self.b, self.c, self.d, self.m, self.n)

    def is_distinct(self) -> bool:
        return len(set(self.nodes())) == 7


FIXTURE_LAYOUT = CondLayout(e=0, p=1, b=2, c=5, d=6, m=3, n=4)


def core_edges(layout: CondLayout = FIXTURE_LAYOUT) -> Dict[Slot, NodeId]:
    """The six edges that define the roles."""
    return {
        (layout.e, 0): layout.p,
        (layout.e, 1): layout.b,
        (layout.p, 0): layout.m,
        (layout.p, 1): layout.n,
        (layout.b, 0): layout.c,
        (layout.b, 1): layout.d,
    }


def avoided_fills(layout: CondLayout = FIXTURE_LAYOUT) -> Dict[Slot, NodeId]:
    """Values the conditional program writes; a fresh fixture never holds them already."""
    return {(layout.c, 0): layout.m, (layout.d, 0): layout.n}


def fill_state(
    n: int,
    fixed: Dict[Slot, NodeId],
    dontcare_seed: int,
    avoid: Dict[Slot, NodeId],
) -> GraphState:
    """Fill every slot not in fixed; seed 0 gives self-loops, other seeds random targets."""
    rng = random.Random(dontcare_seed)
    tables: List[List[NodeId]] = [[0] * n, [0] * n]
    for node in range(n):
        for label in (0, 1):
            slot = (node, label)
            if slot in fixed:
                target = fixed[slot]
            elif dontcare_seed == 0:
                target = node
            else:
                choices = [x for x in range(n) if x != avoid.get(slot)]
                target = rng.choice(choices)
            tables[label][node] = target
    return make_state(n, tables[0], tables[1])


def build_cond_fixture(value: bool, dontcare_seed: int = 0) -> Tuple[GraphState, CondLayout]:
    layout = FIXTURE_LAYOUT
    fixed = core_edges(layout)
    fixed[(layout.c, 1)] = layout.c if value else layout.d
    return fill_state(COND_NODES, fixed, dontcare_seed, avoided_fills(layout)), layout


def cond_program() -> Composition:
    """e[001 := 00] o e[011 := 10], in execution order."""
    return Composition(tuple(parse_op(text) for text in COND_OPS))


def read_cond_result(s: GraphState, layout: CondLayout) -> NodeId:
    return resolve(s, layout.e, COND_READOUT)
