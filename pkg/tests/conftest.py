import os

import pytest

from gadgets.cond import build_cond_fixture
from graph_core.state import make_state, self_loop_state

SAMPLES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "samples")


@pytest.fixture
def samples_dir():
    return SAMPLES


@pytest.fixture
def s0():
    """Three nodes; "0[0 := 10]" flips it between two states."""
    return make_state(3, [1, 1, 2], [0, 2, 1])


@pytest.fixture
def loop1():
    return self_loop_state(1)


@pytest.fixture
def true_fixture():
    state, _ = build_cond_fixture(True, 0)
    return state


@pytest.fixture
def false_fixture():
    state, _ = build_cond_fixture(False, 0)
    return state
