import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from nfree import from_relation

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

# Filled by test_acceptance.py, printed at the end of the session.
ACCEPTANCE_LINES: dict[str, str] = {}


def make_p4():
    return from_relation("abcd", [("a", "c"), ("b", "c"), ("b", "d")])


def make_p5():
    return from_relation(
        "abcdp", [("a", "c"), ("b", "c"), ("b", "d"), ("a", "d"), ("a", "p")]
    )


def make_c3():
    return from_relation("xyz", [("x", "y"), ("y", "z")])


@pytest.fixture
def p4():
    return make_p4()


@pytest.fixture
def p5():
    return make_p5()


@pytest.fixture
def c3():
    return make_c3()


@st.composite
def posets(draw, min_size=0, max_size=8):
    """Random labeled posets: a random DAG oriented by index, then closed."""
    n = draw(st.integers(min_size, max_size))
    labels = [f"x{i}" for i in range(n)]
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(labels))
    rename = dict(zip(labels, perm))
    return from_relation(labels, [(rename[x], rename[y]) for x, y in chosen])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split(".")[0])):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
