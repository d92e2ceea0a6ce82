from collections import Counter

import pytest

from nfree import (
    BoundExceeded,
    Edge,
    EnumerationSpec,
    MinimalityViolation,
    Original,
    confluence_fuzz,
    enumerate_posets,
    from_relation,
    is_n_free,
    minimality_oracle,
)
from nfree.oracle import closure_indices, distinct_seeds, enumerate_closures_bruteforce


def E(x, y):
    return Edge(Original(x), Original(y))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 19), (4, 219), (5, 4231)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_posets(n)) == count


@pytest.mark.parametrize("n", range(1, 6))
def test_two_enumerators_agree(n):
    ours = Counter(closure_indices(p) for p in enumerate_posets(n))
    assert max(ours.values()) == 1
    assert ours == Counter(enumerate_closures_bruteforce(n))


def test_enumeration_is_deterministic():
    first = [p.upsets for p in enumerate_posets(4)]
    assert first == [p.upsets for p in enumerate_posets(4)]


def test_enumeration_filter():
    free = list(enumerate_posets(EnumerationSpec(4, "n-free")))
    assert all(is_n_free(p) for p in free)
    assert len(free) + len(list(enumerate_posets(EnumerationSpec(4, "has-n")))) == 219


def test_enumeration_bounds():
    with pytest.raises(BoundExceeded):
        EnumerationSpec(7)
    with pytest.raises(BoundExceeded):
        EnumerationSpec(8, long_running=True)
    with pytest.raises(BoundExceeded):
        EnumerationSpec(0)
    assert EnumerationSpec(7, long_running=True).n == 7
    with pytest.raises(ValueError):
        EnumerationSpec(3, "no-such-filter")


def test_minimality_examples(p4, p5, c3):
    assert minimality_oracle(p4) == {E("b", "c")}
    assert minimality_oracle(c3) == frozenset()
    assert minimality_oracle(p5) == {E("a", "c"), E("a", "d"), E("b", "c"), E("b", "d")}


def test_minimality_bound():
    # 13 covers: a 13-element antichain below one top element.
    labels = [f"x{i}" for i in range(13)]
    p = from_relation(labels + ["t"], [(x, "t") for x in labels])
    with pytest.raises(BoundExceeded):
        minimality_oracle(p)


def test_minimality_detects_wrong_expectation(monkeypatch, p5):
    import nfree.oracle as oracle

    monkeypatch.setattr(oracle, "a_set", lambda p: frozenset())
    with pytest.raises(MinimalityViolation):
        minimality_oracle(p5)


def test_confluence_examples(p4, p5, c3):
    r = confluence_fuzz(c3, 10, 1)
    assert r.passed and r.steps == 0
    r = confluence_fuzz(p5, 20, 7)
    assert r.passed and r.steps == 4 and len(set(r.seeds)) == 20
    r = confluence_fuzz(p4, 5, 3)
    assert r.passed and r.steps == 1


def test_confluence_reports_rather_than_raises(monkeypatch, p5):
    import nfree.oracle as oracle

    monkeypatch.setattr(oracle, "a_set", lambda p: frozenset())
    r = confluence_fuzz(p5, 3, 0)
    assert not r.passed and r.expected_steps == 2 and r.failures


def test_distinct_seeds():
    assert distinct_seeds(5, 9) == distinct_seeds(5, 9)
    assert len(set(distinct_seeds(50, 1))) == 50
