"""
Naive re-statement of the op semantics, written from the defining equations
on plain lists and written label strings. Nothing here calls the op engine.

    a = f_a1(... f_am(e) ...)      b = f_b1(... f_bn(e) ...)
    g_b0(b) = a,  g_i = f_i for i != b0,  g_b0(x) = f_b0(x) for x != b
"""

from typing import List, Sequence, Tuple

Tables = Tuple[List[int], List[int]]


def follow(f0: Sequence[int], f1: Sequence[int], e: int, written: str) -> int:
    """f_w1(f_w2(... f_wk(e) ...)) for written = w1 w2 ... wk."""
    x = e
    for symbol in reversed(written):
        x = f1[x] if symbol == "1" else f0[x]
    return x


def endpoints(f0: Sequence[int], f1: Sequence[int], e: int, b_string: str, a_string: str) -> Tuple[int, int]:
    """(b, a) for e[b_string := a_string]."""
    return follow(f0, f1, e, b_string[1:]), follow(f0, f1, e, a_string)


def naive_apply(f0: Sequence[int], f1: Sequence[int], e: int, b_string: str, a_string: str) -> Tables:
    b, a = endpoints(f0, f1, e, b_string, a_string)
    g0, g1 = list(f0), list(f1)
    if b_string[0] == "1":
        g1[b] = a
    else:
        g0[b] = a
    return g0, g1


def naive_fixed(f0: Sequence[int], f1: Sequence[int], e: int, b_string: str, a_string: str) -> bool:
    """f_b0(f_b1(... f_bn(e) ...)) == f_a1(... f_am(e) ...)."""
    b, a = endpoints(f0, f1, e, b_string, a_string)
    target = f1 if b_string[0] == "1" else f0
    return target[b] == a
