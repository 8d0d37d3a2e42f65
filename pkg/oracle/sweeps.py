"""
Exhaustive and sampled sweeps comparing the op engine against the naive
equations in oracle.naive.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from graph_core.codec import digest_hex, encode_text
from graph_core.errors import BoundsExceeded
from graph_core.state import GraphState, make_state, self_loop_state
from machine.runner import is_comp_fixed
from op_engine.ops import PrimitiveOp, apply_op, is_op_fixed, parse_op
from op_engine.program import Composition
from oracle.naive import endpoints, naive_apply, naive_fixed

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_NODES = 3

ApplyFn = Callable[[GraphState, PrimitiveOp], GraphState]
PredicateFn = Callable[[GraphState, PrimitiveOp], bool]

EQ_ASSIGN = "a = g_b0(b)"
EQ_OTHER_LABEL = "g_i = f_i for i != b0"
EQ_ONLY_B = "g_b0(x) = f_b0(x) for x != b"
EQ_IFF_APPLY = "is_op_fixed <=> apply_op(s) = s"
EQ_IFF_NAIVE = "is_op_fixed <=> f_b0(b) = a"
EQ_CONSTRUCTION = "all ops fixed => T fixed"
EQ_NO_ANTECEDENT = "at least one all-ops-fixed case"


@dataclass(frozen=True)
class SweepBounds:
    n: int
    max_target_len: int = 3
    max_source_len: int = 3

    def __post_init__(self):
        if not 1 <= self.n <= MAX_EXHAUSTIVE_NODES:
            raise BoundsExceeded(f"exhaustive sweeps support 1..{MAX_EXHAUSTIVE_NODES} nodes, got {self.n}")
        if self.max_target_len < 1:
            raise BoundsExceeded(f"max_target_len must be at least 1, got {self.max_target_len}")
        if self.max_source_len < 0:
            raise BoundsExceeded(f"max_source_len must not be negative, got {self.max_source_len}")


@dataclass(frozen=True)
class OpText:
    """An op as its written parts: origin, b-string, a-string."""

    origin: int
    b_string: str
    a_string: str

    @property
    def text(self) -> str:
        if self.a_string:
            return f"{self.origin}[{self.b_string} := {self.a_string}]"
        return f"{self.origin}[{self.b_string} :=]"


@dataclass(frozen=True)
class Violation:
    state_text: str
    op_text: str
    equation: str


@dataclass
class Report:
    name: str
    cases_checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    antecedent_cases: Optional[int] = None
    cases: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "Report") -> "Report":
        """Combine two partial reports of the same check; result is independent of order."""
        antecedents = None
        if self.antecedent_cases is not None or other.antecedent_cases is not None:
            antecedents = (self.antecedent_cases or 0) + (other.antecedent_cases or 0)
        return Report(
            name=self.name,
            cases_checked=self.cases_checked + other.cases_checked,
            violations=sorted(
                self.violations + other.violations,
                key=lambda v: (v.equation, v.op_text, v.state_text),
            ),
            antecedent_cases=antecedents,
            cases=sorted(self.cases + other.cases),
        )


def enumerate_states(n: int) -> List[GraphState]:
    """All (n^n)^2 states, lexicographic on succ0 then succ1."""
    if not 1 <= n <= MAX_EXHAUSTIVE_NODES:
        raise BoundsExceeded(f"cannot enumerate states for n={n}; supported 1..{MAX_EXHAUSTIVE_NODES}")
    maps = list(itertools.product(range(n), repeat=n))
    return [make_state(n, succ0, succ1) for succ0 in maps for succ1 in maps]


def _bit_strings(min_len: int, max_len: int) -> Iterator[str]:
    for length in range(min_len, max_len + 1):
        for bits in itertools.product("01", repeat=length):
            yield "".join(bits)


def enumerate_op_texts(bounds: SweepBounds) -> List[OpText]:
    targets = list(_bit_strings(1, bounds.max_target_len))
    sources = list(_bit_strings(0, bounds.max_source_len))
    return [
        OpText(origin, b_string, a_string)
        for origin in range(bounds.n)
        for b_string in targets
        for a_string in sources
    ]


def enumerate_ops(bounds: SweepBounds) -> List[PrimitiveOp]:
    """Every op with origin < n and written lengths within bounds."""
    return [parse_op(op.text) for op in enumerate_op_texts(bounds)]


def random_state(rng: random.Random, n: int) -> GraphState:
    return make_state(n, [rng.randrange(n) for _ in range(n)], [rng.randrange(n) for _ in range(n)])


def random_cases(
    count: int,
    seed: int,
    min_nodes: int = 1,
    max_nodes: int = 64,
    max_path: int = 6,
) -> Iterator[Tuple[GraphState, OpText]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_nodes, max_nodes)
        b_len = rng.randint(1, max_path + 1)
        a_len = rng.randint(0, max_path)
        yield (
            random_state(rng, n),
            OpText(
                rng.randrange(n),
                "".join(rng.choice("01") for _ in range(b_len)),
                "".join(rng.choice("01") for _ in range(a_len)),
            ),
        )


def _exhaustive_cases(bounds: SweepBounds) -> Iterator[Tuple[GraphState, OpText]]:
    ops = enumerate_op_texts(bounds)
    for s in enumerate_states(bounds.n):
        for op in ops:
            yield s, op


def postcondition_failures(s: GraphState, op: OpText, g: GraphState) -> List[str]:
    """Equations that g = op(s) violates."""
    f = (s.succ0, s.succ1)
    if g.n != s.n:
        return [EQ_ASSIGN, EQ_OTHER_LABEL, EQ_ONLY_B]
    gt = (g.succ0, g.succ1)
    b0 = int(op.b_string[0])
    b, a = endpoints(s.succ0, s.succ1, op.origin, op.b_string, op.a_string)
    failed = []
    if gt[b0][b] != a:
        failed.append(EQ_ASSIGN)
    if any(gt[1 - b0][x] != f[1 - b0][x] for x in range(s.n)):
        failed.append(EQ_OTHER_LABEL)
    if any(gt[b0][x] != f[b0][x] for x in range(s.n) if x != b):
        failed.append(EQ_ONLY_B)
    return failed


class _ParsedOps(dict):
    def __missing__(self, op: OpText) -> PrimitiveOp:
        parsed = self[op] = parse_op(op.text)
        return parsed


def _record(report: Report, s: GraphState, op: OpText, failed: Sequence[str], keep_cases: bool) -> None:
    report.cases_checked += 1
    state_text = None
    for equation in failed:
        state_text = state_text or encode_text(s)
        report.violations.append(Violation(state_text=state_text, op_text=op.text, equation=equation))
    if keep_cases:
        status = "ok" if not failed else "violation:" + ";".join(failed)
        report.cases.append((f"{report.name} {digest_hex(s)} {op.text}", status))


def _run_postconditions(
    name: str,
    cases: Iterable[Tuple[GraphState, OpText]],
    apply: ApplyFn,
    keep_cases: bool,
) -> Report:
    report = Report(name=name)
    parsed = _ParsedOps()
    for s, op in cases:
        g = apply(s, parsed[op])
        _record(report, s, op, postcondition_failures(s, op, g), keep_cases)
    logger.info("%s: %d cases, %d violations", name, report.cases_checked, len(report.violations))
    return report


def check_postconditions(bounds: SweepBounds, apply: ApplyFn = apply_op, keep_cases: bool = False) -> Report:
    """All three defining equations for every enumerated (state, op)."""
    return _run_postconditions("postconditions", _exhaustive_cases(bounds), apply, keep_cases)


def check_postconditions_sampled(
    count: int,
    seed: int,
    min_nodes: int = 1,
    max_nodes: int = 64,
    max_path: int = 6,
    apply: ApplyFn = apply_op,
) -> Report:
    cases = random_cases(count, seed, min_nodes, max_nodes, max_path)
    return _run_postconditions("postconditions-sampled", cases, apply, keep_cases=False)


def _run_fixed_point_iff(
    name: str,
    cases: Iterable[Tuple[GraphState, OpText]],
    predicate: PredicateFn,
    apply: ApplyFn,
    keep_cases: bool,
) -> Report:
    report = Report(name=name)
    parsed = _ParsedOps()
    for s, op in cases:
        engine_op = parsed[op]
        claimed = predicate(s, engine_op)
        failed = []
        if claimed != (apply(s, engine_op) == s):
            failed.append(EQ_IFF_APPLY)
        g0, g1 = naive_apply(s.succ0, s.succ1, op.origin, op.b_string, op.a_string)
        unchanged = tuple(g0) == s.succ0 and tuple(g1) == s.succ1
        if claimed != unchanged or claimed != naive_fixed(s.succ0, s.succ1, op.origin, op.b_string, op.a_string):
            failed.append(EQ_IFF_NAIVE)
        _record(report, s, op, failed, keep_cases)
    logger.info("%s: %d cases, %d violations", name, report.cases_checked, len(report.violations))
    return report


def check_fixed_point_iff(
    bounds: SweepBounds,
    predicate: PredicateFn = is_op_fixed,
    apply: ApplyFn = apply_op,
    keep_cases: bool = False,
) -> Report:
    """is_op_fixed(s, op) must agree with apply_op(s, op) == s and with the naive equation."""
    return _run_fixed_point_iff("fixed-point-iff", _exhaustive_cases(bounds), predicate, apply, keep_cases)


def check_fixed_point_iff_sampled(
    count: int,
    seed: int,
    min_nodes: int = 1,
    max_nodes: int = 64,
    max_path: int = 6,
    predicate: PredicateFn = is_op_fixed,
) -> Report:
    cases = random_cases(count, seed, min_nodes, max_nodes, max_path)
    return _run_fixed_point_iff("fixed-point-iff-sampled", cases, predicate, apply_op, keep_cases=False)


def _naive_fold(s: GraphState, program: Sequence[OpText]) -> Tuple[List[int], List[int]]:
    f0, f1 = list(s.succ0), list(s.succ1)
    for op in program:
        f0, f1 = naive_apply(f0, f1, op.origin, op.b_string, op.a_string)
    return f0, f1


def check_fixed_construction(bounds: SweepBounds, programs: int, seed: int, keep_cases: bool = False) -> Report:
    """Sampled (state, T) pairs: whenever every op of T is fixed, T itself must be fixed."""
    rng = random.Random(seed)
    states = enumerate_states(bounds.n)
    texts = enumerate_op_texts(bounds)
    parsed = _ParsedOps()
    report = Report(name="fixed-construction", antecedent_cases=0)
    for index in range(programs):
        s = self_loop_state(bounds.n) if index == 0 else rng.choice(states)
        program = [rng.choice(texts) for _ in range(rng.randint(1, 3))]
        program_text = "; ".join(op.text for op in program)
        report.cases_checked += 1
        if not all(naive_fixed(s.succ0, s.succ1, op.origin, op.b_string, op.a_string) for op in program):
            if keep_cases:
                report.cases.append((f"{report.name} {digest_hex(s)} {program_text}", "vacuous"))
            continue
        report.antecedent_cases += 1
        f0, f1 = _naive_fold(s, program)
        engine_fixed = is_comp_fixed(s, Composition(tuple(parsed[op] for op in program)))
        ok = tuple(f0) == s.succ0 and tuple(f1) == s.succ1 and engine_fixed
        if not ok:
            report.violations.append(Violation(encode_text(s), program_text, EQ_CONSTRUCTION))
        if keep_cases:
            report.cases.append((f"{report.name} {digest_hex(s)} {program_text}", "ok" if ok else "violation"))
    if report.antecedent_cases == 0:
        report.violations.append(Violation("", "", EQ_NO_ANTECEDENT))
    logger.info(
        "%s: %d programs, %d with every op fixed, %d violations",
        report.name,
        report.cases_checked,
        report.antecedent_cases,
        len(report.violations),
    )
    return report


@dataclass(frozen=True)
class ConverseWitness:
    """A state fixed by T although some op of T moves it."""

    state: GraphState
    program: Tuple[OpText, ...]
    moving_op: OpText


def find_converse_witness(n: int = 2, max_path: int = 2) -> Optional[ConverseWitness]:
    """First (state, two-op program) where T is fixed but not every op is."""
    bounds = SweepBounds(n, max_target_len=max_path, max_source_len=max_path)
    texts = enumerate_op_texts(bounds)
    for s in enumerate_states(n):
        for first in texts:
            if naive_fixed(s.succ0, s.succ1, first.origin, first.b_string, first.a_string):
                continue
            f0, f1 = naive_apply(s.succ0, s.succ1, first.origin, first.b_string, first.a_string)
            for second in texts:
                g0, g1 = naive_apply(f0, f1, second.origin, second.b_string, second.a_string)
                if tuple(g0) == s.succ0 and tuple(g1) == s.succ1:
                    return ConverseWitness(state=s, program=(first, second), moving_op=first)
    return None


def run_all_checks(
    bounds: SweepBounds,
    programs: int,
    seed: int,
    keep_cases: bool = False,
) -> List[Report]:
    return [
        check_postconditions(bounds, keep_cases=keep_cases),
        check_fixed_point_iff(bounds, keep_cases=keep_cases),
        check_fixed_construction(bounds, programs, seed, keep_cases=keep_cases),
    ]
