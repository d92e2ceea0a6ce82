import pytest
from hypothesis import given

import bruteforce
from conftest import posets
from nfree import (
    Edge,
    NForm,
    Original,
    a_set,
    dual,
    enumerate_posets,
    find_ns,
    from_relation,
    grillet_closure,
    is_cac,
    is_n_free,
    is_series_parallel,
    n_diag,
    nd_diag,
)


def E(x, y):
    return Edge(Original(x), Original(y))


def quads(ws):
    return [tuple(str(v) for v in w[:4]) for w in ws]


def test_single_n(p4):
    assert quads(find_ns(p4, NForm.N)) == [("a", "b", "c", "d")]
    assert find_ns(p4, "N")[0].diagonal == E("b", "c")


def test_chain_has_no_n(c3):
    for form in NForm:
        assert find_ns(c3, form) == []
    assert n_diag(c3) == nd_diag(c3) == a_set(c3) == frozenset()


def test_p5_witnesses(p5):
    # In witness order (a, b, c, d): diagonals a<c and a<d, with b and p as outer strokes.
    assert quads(find_ns(p5, NForm.N)) == [("b", "a", "c", "p"), ("b", "a", "d", "p")]
    assert {w[:4] for w in find_ns(p5, NForm.N)} == bruteforce.witnesses(p5, "N")


def test_edge_sets_p4(p4):
    assert n_diag(p4) == {E("b", "c")}
    assert nd_diag(p4) == {E("b", "c")}
    assert a_set(p4) == frozenset()
    assert bruteforce.a_set(p4) == set()


def test_edge_sets_p5(p5):
    assert n_diag(p5) == {E("a", "c"), E("a", "d")}
    assert a_set(p5) == {E("b", "c"), E("b", "d")}
    assert nd_diag(p5) == {E("a", "c"), E("a", "d")}
    assert nd_diag(p5) <= n_diag(p5) | a_set(p5)
    assert bruteforce.n_diag(p5) == n_diag(p5)
    assert bruteforce.a_set(p5) == a_set(p5)
    assert bruteforce.nd_diag(p5) == nd_diag(p5)


def test_predicates(p4, p5, c3):
    assert not is_n_free(p4)
    assert is_n_free(c3)
    assert is_n_free(grillet_closure(p5))
    assert is_cac(c3)
    assert not is_cac(p4)
    assert is_series_parallel(c3)
    assert not is_series_parallel(p4)
    assert not is_series_parallel(p5)


def test_diagram_n_with_long_side():
    # a<x<d makes a<d, so {a,b,c,d} is an N of the diagram but not of the poset,
    # while {x, a, c, b} is an ordinary N.
    p = from_relation("abcdx", [("a", "c"), ("b", "c"), ("b", "d"), ("a", "x"), ("x", "d")])
    assert ("a", "b", "c", "d") in quads(find_ns(p, NForm.NDIAG))
    assert ("a", "b", "c", "d") not in quads(find_ns(p, NForm.N))
    assert not is_n_free(p)


def test_series_parallel_differs_from_n_free():
    # The full subdivision of an N: N-free, yet a, b, c, d still induce an N.
    p = from_relation(
        "abcdxyz", [("a", "x"), ("x", "c"), ("b", "y"), ("y", "c"), ("b", "z"), ("z", "d")]
    )
    assert is_n_free(p)
    assert not is_series_parallel(p)


@pytest.mark.parametrize("n", range(1, 6))
def test_against_quadruple_scan(n):
    for p in enumerate_posets(n):
        for form in NForm:
            assert {w[:4] for w in find_ns(p, form)} == bruteforce.witnesses(p, form.value)
        assert n_diag(p) == bruteforce.n_diag(p)
        assert nd_diag(p) == bruteforce.nd_diag(p)
        assert a_set(p) == bruteforce.a_set(p)
        assert is_series_parallel(p) == (not bruteforce.has_induced_n(p))


@pytest.mark.parametrize("n", range(1, 6))
def test_cac_against_subset_scan(n):
    for p in enumerate_posets(n):
        assert is_cac(p) == bruteforce.is_cac(p)


@given(posets(max_size=9))
def test_three_forms_agree(p):
    present = {form: bool(find_ns(p, form)) for form in NForm}
    assert len(set(present.values())) == 1
    ns = {w[:4] for w in find_ns(p, NForm.N)}
    assert ns <= {w[:4] for w in find_ns(p, NForm.NPRIME)}
    assert ns <= {w[:4] for w in find_ns(p, NForm.NDIAG)}


@given(posets(max_size=9))
def test_duality(p):
    d = dual(p)
    for fn in (n_diag, a_set, nd_diag):
        assert fn(d) == {Edge(e.upper, e.lower) for e in fn(p)}


@given(posets(max_size=9))
def test_edge_set_containments(p):
    diag, extra = n_diag(p), a_set(p)
    assert not diag & extra
    assert (diag | extra) <= set(p.covers)
    assert nd_diag(p) <= diag | extra


@given(posets(max_size=8))
def test_grillet_equivalence(p):
    assert is_cac(p) == is_n_free(p)
    if is_series_parallel(p):
        assert is_n_free(p)


@given(posets(max_size=9))
def test_lemma_first(p):
    diag = n_diag(p)
    for b, c in p.covers:
        if Edge(b, c) in diag:
            continue
        for a in p:
            if not p.is_cover(a, c):
                continue
            for d in p:
                if not p.is_cover(b, d):
                    continue
                assert p.lt(a, d)
                if not p.is_cover(a, d):
                    assert Edge(a, c) in diag and Edge(b, d) in diag
                exists = any(p.is_cover(a, x) and p.incomparable(x, b) for x in p)
                assert (Edge(a, c) in diag) == exists
