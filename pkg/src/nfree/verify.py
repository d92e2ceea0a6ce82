"""Property suites run over every enumerated poset of a given size.

Each check takes a poset and returns ``None`` or a failure message.  The
``verify`` CLI command prints one line per failure, each carrying the poset
as compact JSON, followed by ``checked=<k> failed=<f>``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import MinimalityViolation
from .formats import poset_to_json
from .npattern import (
    NForm,
    _witness_indices,
    a_set,
    a_set_indices,
    find_ns,
    is_cac,
    is_n_free,
    is_series_parallel,
    n_diag,
    n_diag_indices,
    nd_diag,
)
from .oracle import EnumerationSpec, closure_report, enumerate_posets, minimality_oracle
from .poset import Dummy, Edge, Poset, iter_bits, maximal_antichain_masks, maximal_chain_masks
from .subdivision import (
    full_subdivision,
    grillet_closure,
    nd_closure,
    s_n,
    sequential_steps,
    subdivide,
)

Check = Callable[[Poset], "str | None"]
SUITES: dict[str, list[tuple[str, Check]]] = {
    "npattern": [],
    "subdivision": [],
    "minimality": [],
    "confluence": [],
}
CONFLUENCE_TRIALS = 5
CONFLUENCE_SEED = 2024


def check(suite: str):
    def register(fn):
        SUITES[suite].append((fn.__name__, fn))
        return fn

    return register


def _fmt(edges: Iterable[Edge]) -> str:
    return "{" + ", ".join(str(e) for e in sorted(edges)) + "}"


def reverse_edges(edges: Iterable[Edge]) -> frozenset[Edge]:
    return frozenset(Edge(e.upper, e.lower) for e in edges)


def dual_name(v):
    """Rename dummies so that a subdivision of P matches one of its dual."""
    if isinstance(v, Dummy):
        return Dummy(dual_name(v.upper), dual_name(v.lower), v.round)
    return v


# -- poset core --------------------------------------------------------------------


@check("npattern")
def transitive_reduction(p: Poset):
    strict = p.closure
    expected = {
        (x, y) for x, y in strict if not any((x, z) in strict and (z, y) in strict for z in p.vertices)
    }
    if {tuple(e) for e in p.covers} != expected:
        return "covers are not the transitive reduction of the order"
    reach = set()
    for x in p.vertices:
        stack = [x]
        while stack:
            u = stack.pop()
            for e in p.covers:
                if e.lower == u and (x, e.upper) not in reach:
                    reach.add((x, e.upper))
                    stack.append(e.upper)
    if reach != strict:
        return "transitive closure of the covers differs from the order"


@check("npattern")
def dual_involution(p: Poset):
    d = p.dual()
    if d.closure != {(y, x) for x, y in p.closure}:
        return "dual does not reverse the order"
    if d.dual() != p:
        return "dual is not an involution"


@check("npattern")
def chains_and_antichains(p: Poset):
    n = len(p)
    comparable = [p.upsets[i] | p.downsets[i] | 1 << i for i in range(n)]
    chains, antichains = set(), set()
    for s in range(1, 1 << n):
        members = list(iter_bits(s))
        if all(comparable[i] & s == s for i in members):
            if not any(comparable[x] & s == s for x in range(n) if not s >> x & 1):
                chains.add(s)
        if all(comparable[i] & s == 1 << i for i in members):
            if not any(comparable[x] & s == 0 for x in range(n) if not s >> x & 1):
                antichains.add(s)
    found_c, found_a = maximal_chain_masks(p), maximal_antichain_masks(p)
    if len(found_c) != len(set(found_c)) or set(found_c) != chains:
        return "maximal chains are incomplete, duplicated or not maximal"
    if len(found_a) != len(set(found_a)) or set(found_a) != antichains:
        return "maximal antichains are incomplete, duplicated or not maximal"


# -- N patterns ----------------------------------------------------------------------


@check("npattern")
def three_forms(p: Poset):
    present = [bool(next(_witness_indices(p, form), None)) for form in NForm]
    if len(set(present)) != 1:
        return "N / N' / diagram-N existence disagree: " + str(dict(zip(NForm, present)))


@check("npattern")
def witness_inclusion(p: Poset):
    ns = {w[:4] for w in find_ns(p, NForm.N)}
    if not ns <= {w[:4] for w in find_ns(p, NForm.NPRIME)}:
        return "an N witness is not an N' witness"
    if not ns <= {w[:4] for w in find_ns(p, NForm.NDIAG)}:
        return "an N witness is not a diagram-N witness"


@check("npattern")
def duality(p: Poset):
    d = p.dual()
    for name, fn in (("n_diag", n_diag), ("a_set", a_set), ("nd_diag", nd_diag)):
        if reverse_edges(fn(p)) != fn(d):
            return f"{name} does not commute with duality"


@check("npattern")
def disjoint_and_covers(p: Poset):
    diag, extra = n_diag(p), a_set(p)
    if diag & extra:
        return f"n_diag and a_set overlap on {_fmt(diag & extra)}"
    if not (diag | extra) <= set(p.covers):
        return "n_diag or a_set contains a non-cover"


@check("npattern")
def nd_diag_within(p: Poset):
    extra = nd_diag(p) - (n_diag(p) | a_set(p))
    if extra:
        return f"nd_diag has edges outside n_diag | a_set: {_fmt(extra)}"


def _lemma_first_cases(p: Poset):
    diag = n_diag_indices(p)
    for b, c in p.cover_index_pairs():
        if (b, c) in diag:
            continue
        for a in iter_bits(p.lower_covers[c]):
            for d in iter_bits(p.upper_covers[b]):
                yield a, b, c, d, diag


@check("npattern")
def lemma_first_1(p: Poset):
    for a, b, c, d, diag in _lemma_first_cases(p):
        if not p.upsets[a] >> d & 1:
            return f"a={p.vertices[a]} is not below d={p.vertices[d]}"
        if not p.upper_covers[a] >> d & 1 and not ((a, c) in diag and (b, d) in diag):
            return f"(a,d) is not a cover but (a,c) or (b,d) is not diagonal, a,b,c,d={a},{b},{c},{d}"


@check("npattern")
def lemma_first_3(p: Poset):
    for a, b, c, d, diag in _lemma_first_cases(p):
        inc_b = ~(p.upsets[b] | p.downsets[b] | 1 << b)
        exists = bool(p.upper_covers[a] & inc_b)
        if ((a, c) in diag) != exists:
            return f"diagonal status of {p.vertices[a]}<{p.vertices[c]} disagrees with the cover criterion"


@check("npattern")
def grillet_equivalence(p: Poset):
    if is_cac(p) != is_n_free(p):
        return f"is_cac={is_cac(p)} but is_n_free={is_n_free(p)}"


@check("npattern")
def series_parallel_is_n_free(p: Poset):
    if is_series_parallel(p) and not is_n_free(p):
        return "series-parallel poset contains an N"


# -- subdivision -----------------------------------------------------------------------


@check("subdivision")
def theorem_1(p: Poset):
    g = grillet_closure(p)
    if not is_n_free(g):
        return "grillet_closure still contains an N"
    expected = len(p) + len(n_diag_indices(p)) + len(a_set_indices(p))
    if len(g) != expected:
        return f"closure has {len(g)} vertices, expected {expected}"


@check("subdivision")
def lemma_a(p: Poset):
    q = s_n(p)
    if n_diag(q) != a_set(p):
        return f"n_diag(s_n(P))={_fmt(n_diag(q))} but a_set(P)={_fmt(a_set(p))}"
    if a_set(q):
        return f"a_set(s_n(P)) is not empty: {_fmt(a_set(q))}"


@check("subdivision")
def idempotence(p: Poset):
    g = grillet_closure(p)
    if grillet_closure(g) != g:
        return "grillet_closure is not idempotent"


@check("subdivision")
def dummy_degree(p: Poset):
    for q in (grillet_closure(p), full_subdivision(p)):
        for i, v in enumerate(q.vertices):
            if isinstance(v, Dummy) and (
                q.upper_covers[i].bit_count() != 1 or q.lower_covers[i].bit_count() != 1
            ):
                return f"dummy {v} does not have exactly one lower and one upper cover"


@check("subdivision")
def embedding(p: Poset):
    for name, edges in (("covers", p.covers), ("n_diag", n_diag(p)), ("a_set", a_set(p))):
        if subdivide(p, edges).restrict(p.vertices) != p:
            return f"P does not embed in its subdivision along {name}"


@check("subdivision")
def full_subdivision_n_free(p: Poset):
    q = full_subdivision(p)
    if not is_n_free(q) or len(q) != len(p) + len(p.covers):
        return "full subdivision is not an N-free poset of the expected size"


@check("subdivision")
def nd_variant(p: Poset):
    if nd_closure(p) != grillet_closure(p):
        return "nd_closure differs from grillet_closure"


@check("subdivision")
def dual_commutation(p: Poset):
    if grillet_closure(p.dual()) != grillet_closure(p).dual().relabel(dual_name):
        return "grillet_closure does not commute with duality"


@check("subdivision")
def single_n(p: Poset):
    witnesses = find_ns(p, NForm.N)
    if len(witnesses) == 1:
        q = subdivide(p, [witnesses[0].diagonal])
        if not is_n_free(q):
            return "one subdivision step left an N behind although P had a single N"


@check("subdivision")
def lemma_second(p: Poset):
    allowed = n_diag(p) | a_set(p)
    for step, current in sequential_steps(p):
        stray = n_diag(current) - allowed
        if stray:
            return f"step {step.index}: diagonal edges {_fmt(stray)} outside n_diag | a_set"


@check("minimality")
def minimality(p: Poset):
    try:
        minimality_oracle(p)
    except MinimalityViolation as exc:
        return str(exc)


@check("confluence")
def confluence(p: Poset):
    report = closure_report(p, CONFLUENCE_TRIALS, CONFLUENCE_SEED)
    if not report.passed:
        return "; ".join(report.failures)


# -- runner ---------------------------------------------------------------------------


@dataclass
class Failure:
    suite: str
    check: str
    message: str
    poset: Poset

    def __str__(self):
        doc = json.dumps(poset_to_json(self.poset), separators=(",", ":"))
        return f"FAIL {self.suite}.{self.check}: {self.message} poset={doc}"


@dataclass
class VerificationReport:
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"checked={self.checked} failed={len(self.failures)}"


def select_checks(suites: Iterable[str]) -> list[tuple[str, str, Check]]:
    names = list(suites)
    if "all" in names:
        names = list(SUITES)
    out = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
        out.extend((suite, name, fn) for name, fn in SUITES[suite])
    return out


def verify_poset(p: Poset, checks) -> list[Failure]:
    failures = []
    for suite, name, fn in checks:
        message = fn(p)
        if message is not None:
            failures.append(Failure(suite, name, message, p))
    return failures


def run_verification(n: int, suites: Iterable[str] = ("all",), long_running: bool = False) -> VerificationReport:
    checks = select_checks(suites)
    report = VerificationReport()
    for p in enumerate_posets(EnumerationSpec(n, long_running=long_running)):
        report.checked += 1
        report.failures.extend(verify_poset(p, checks))
    return report
