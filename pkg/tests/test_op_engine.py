import random

import pytest
from hypothesis import given, strategies as st

from graph_core.errors import EmptyTarget, OriginOutOfRange, ParseError
from graph_core.state import make_state, resolve, self_loop_state
from op_engine.ops import PrimitiveOp, apply_op, edge_delta, is_op_fixed, parse_op, print_op
from op_engine.program import (
    Composition,
    apply_composition,
    from_composition_order,
    parse_program,
    print_program,
)
from strategies import ops, ops_for, states, states_with_op, states_with_program


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0[01 := 100]", PrimitiveOp(0, 0, (1,), (0, 0, 1))),
        ("5[1 :=]", PrimitiveOp(5, 1, (), ())),
        ("0[011 := 10]", PrimitiveOp(0, 0, (1, 1), (0, 1))),
        ("0[001 := 00]", PrimitiveOp(0, 0, (1, 0), (0, 0))),
        ("  12 [ 10:=0 ] ", PrimitiveOp(12, 1, (0,), (0,))),
    ],
)
def test_parse_op(text, expected):
    assert parse_op(text) == expected


def test_parse_op_requires_assigned_label():
    with pytest.raises(EmptyTarget):
        parse_op("0[:= 1]")


@pytest.mark.parametrize("text", ["0[2 := 1]", "x[0 :=]", "0[0 = 1]", "0[0 :=] 1", "[0 := 1]", ""])
def test_parse_op_rejects(text):
    with pytest.raises(ParseError):
        parse_op(text)


def test_print_op():
    assert print_op(PrimitiveOp(0, 0, (1,), (0, 0, 1))) == "0[01 := 100]"
    assert print_op(PrimitiveOp(5, 1, (), ())) == "5[1 :=]"


@given(ops)
def test_parse_print_round_trip(op):
    assert parse_op(print_op(op)) == op


def test_parse_print_round_trip_random_ops():
    rng = random.Random(11)
    for _ in range(1000):
        op = PrimitiveOp(
            origin=rng.randrange(100),
            assigned_label=rng.randrange(2),
            target_path=tuple(rng.randrange(2) for _ in range(rng.randrange(6))),
            source_path=tuple(rng.randrange(2) for _ in range(rng.randrange(6))),
        )
        assert parse_op(print_op(op)) == op


@pytest.mark.parametrize("text", ["0[01:=100]", " 0 [ 01 :=   100 ] ", "007[1:=]"])
def test_print_parse_canonicalizes(text):
    canonical = print_op(parse_op(text))
    assert print_op(parse_op(canonical)) == canonical
    assert " " not in canonical.split("[")[0]


def test_apply_on_self_loops_is_identity():
    s = self_loop_state(3)
    assert apply_op(s, parse_op("1[0110 := 011]")) == s


def test_apply_example(s0):
    # A = f1(f0(0)) = f1(1) = 2
    assert apply_op(s0, parse_op("0[0 := 10]")).succ0 == (2, 1, 2)


def test_apply_on_true_fixture(true_fixture):
    # B = f1(f1(0)) = 6, A = f1(f0(0)) = 4
    after = apply_op(true_fixture, parse_op("0[011 := 10]"))
    assert after.succ0[6] == 4
    assert after.succ1 == true_fixture.succ1


def test_endpoints_read_before_write():
    s = make_state(3, [1, 2, 0], [0, 0, 0])
    # B = 0 and A = f0(f0(0)) = 2 are both read from s
    assert apply_op(s, parse_op("0[0 := 00]")).succ0 == (2, 2, 0)


def test_apply_rejects_bad_origin(s0):
    with pytest.raises(OriginOutOfRange):
        apply_op(s0, parse_op("3[0 :=]"))
    with pytest.raises(OriginOutOfRange):
        is_op_fixed(s0, parse_op("3[0 :=]"))


def test_is_op_fixed_examples(s0):
    assert is_op_fixed(self_loop_state(2), parse_op("1[01 := 10]"))
    assert not is_op_fixed(s0, parse_op("0[0 := 10]"))


def test_edge_delta(s0):
    assert edge_delta(s0, parse_op("0[0 := 10]")) == (0, 0, 1, 2)


@given(states_with_op())
def test_single_edge_delta(case):
    s, op = case
    g = apply_op(s, op)
    b = resolve(s, op.origin, op.target_path)
    changed = {
        (x, label)
        for label in (0, 1)
        for x in range(s.n)
        if g.successor(label, x) != s.successor(label, x)
    }
    assert changed <= {(b, op.assigned_label)}
    assert g.successor(op.assigned_label, b) == resolve(s, op.origin, op.source_path)


@given(states_with_op())
def test_fixed_point_equivalence(case):
    s, op = case
    assert is_op_fixed(s, op) == (apply_op(s, op) == s)


def test_parse_program_in_execution_order():
    program = parse_program("0[011 := 10]\n0[001 := 00]\n")
    assert [print_op(op) for op in program] == ["0[011 := 10]", "0[001 := 00]"]
    assert program.lines == (1, 2)


def test_parse_program_skips_comments_and_blanks():
    program = parse_program("# cond\n\n  0[011 := 10]\n# then\n0[001 := 00]\n\n")
    assert len(program) == 2
    assert program.line_of(1) == 5


def test_parse_program_empty():
    assert parse_program("") == Composition()


@pytest.mark.parametrize(
    "text,line,error",
    [
        ("0[2 := 1]", 1, ParseError),
        ("# ok\n0[0 :=]\n0[:= 1]\n", 3, EmptyTarget),
        ("0[0 :=]\n\n0[0 := 1\n", 3, ParseError),
    ],
)
def test_parse_program_errors_carry_line(text, line, error):
    with pytest.raises(error) as info:
        parse_program(text, source="p.pop")
    assert info.value.line == line
    assert f"p.pop:{line}:" in str(info.value)


def test_print_program_round_trip():
    text = "0[011 := 10]\n0[001 := 00]\n"
    assert print_program(parse_program(text)) == text


def test_from_composition_order():
    outer, inner = parse_op("0[001 := 00]"), parse_op("0[011 := 10]")
    assert from_composition_order([outer, inner]).ops == (inner, outer)


def test_apply_composition_empty(s0):
    assert apply_composition(s0, Composition()) == s0


def test_apply_composition_is_order_sensitive():
    s = make_state(2, [0, 0], [1, 1])
    forward = parse_program("0[0 := 1]\n0[0 :=]\n")
    backward = parse_program("0[0 :=]\n0[0 := 1]\n")
    assert apply_composition(s, forward).succ0[0] == 0
    assert apply_composition(s, backward).succ0[0] == 1


def test_apply_composition_reports_op_index():
    s = self_loop_state(2)
    with pytest.raises(OriginOutOfRange) as info:
        apply_composition(s, parse_program("0[0 :=]\n5[0 :=]\n"))
    assert info.value.op_index == 1


@given(states_with_program())
def test_apply_composition_is_a_fold(case):
    s, program = case
    expected = s
    for op in program:
        expected = apply_op(expected, op)
    assert apply_composition(s, program) == expected


@given(states(max_nodes=6), st.data())
def test_ops_on_random_states_keep_closure(s, data):
    op = data.draw(ops_for(s.n))
    g = apply_op(s, op)
    assert all(0 <= x < g.n for x in g.succ0 + g.succ1)
