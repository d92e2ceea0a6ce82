"""Barycentric subdivision operators and the one-edge-at-a-time closure.

A dummy placed on the cover ``x < y`` is named ``Dummy(x, y, r)``, where ``r``
is one more than the largest round already used for that pair.  Because the
name depends only on the edge, the simultaneous and sequential closures of
a poset produce identical vertex ids and can be compared with ``==``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import InvalidScript, NotACoverEdge
from .npattern import n_diag_indices, nd_diag
from .poset import Dummy, Edge, Poset, VertexId, as_vertex, transitive_closure_masks


def _subdivide(p: Poset, edges: Iterable) -> tuple[Poset, dict[tuple[int, int], Dummy]]:
    ucov = p.upper_covers
    pairs = set()
    for lower, upper in edges:
        i, j = p.index(lower), p.index(upper)
        if not ucov[i] >> j & 1:
            raise NotACoverEdge(f"{p.vertices[i]}<{p.vertices[j]} is not a covering pair")
        pairs.add((i, j))
    if not pairs:
        return p, {}

    vs = p.vertices
    used_rounds: dict[tuple, int] = {}
    for v in vs:
        if isinstance(v, Dummy):
            k = (v.lower, v.upper)
            used_rounds[k] = max(used_rounds.get(k, 0), v.round)
    created = {
        (i, j): Dummy(vs[i], vs[j], used_rounds.get((vs[i], vs[j]), 0) + 1) for i, j in sorted(pairs)
    }

    new_vs = tuple(sorted(vs + tuple(created.values())))
    index = {v: k for k, v in enumerate(new_vs)}
    remap = [index[v] for v in vs]
    adjacency = [0] * len(new_vs)
    for i, j in p.cover_index_pairs():
        lo, hi = remap[i], remap[j]
        u = created.get((i, j))
        if u is None:
            adjacency[lo] |= 1 << hi
        else:
            m = index[u]
            adjacency[lo] |= 1 << m
            adjacency[m] |= 1 << hi
    up = transitive_closure_masks(adjacency)
    return Poset.from_upsets(new_vs, up, index), created


def subdivide(p: Poset, edges: Iterable) -> Poset:
    """Insert one dummy vertex on each listed covering pair."""
    return _subdivide(p, edges)[0]


def full_subdivision(p: Poset) -> Poset:
    return subdivide(p, p.covers)


def s_n(p: Poset) -> Poset:
    """One simultaneous pass: a dummy on every diagonal edge."""
    vs = p.vertices
    return _subdivide(p, ((vs[i], vs[j]) for i, j in n_diag_indices(p)))[0]


def grillet_closure(p: Poset) -> Poset:
    """The smallest N-free barycentric subdivision, computed as two ``s_n`` passes."""
    return s_n(s_n(p))


def nd_closure(p: Poset) -> Poset:
    """Two simultaneous passes driven by the diagonals of diagram N's instead."""
    q = subdivide(p, nd_diag(p))
    return subdivide(q, nd_diag(q))


# -- sequential algorithm -------------------------------------------------------


Chooser = Callable[[Sequence[Edge]], Edge]


@dataclass(frozen=True)
class Lexicographic:
    """Always subdivide the least diagonal edge in canonical order."""

    def chooser(self) -> Chooser:
        return lambda candidates: candidates[0]


@dataclass(frozen=True)
class SeededRandom:
    """Pick uniformly with ``random.Random(seed)``.

    At every step the generator draws ``randrange(k)`` to index the ``k``
    diagonal edges in canonical order, so a seed fixes the whole trace.
    """

    seed: int = 0

    def chooser(self) -> Chooser:
        rng = random.Random(self.seed)
        return lambda candidates: candidates[rng.randrange(len(candidates))]


@dataclass(frozen=True)
class Scripted:
    """Replay a fixed sequence of edges; each must be diagonal when consumed."""

    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple(Edge(as_vertex(x), as_vertex(y)) for x, y in self.edges)
        )

    def chooser(self) -> Chooser:
        script = iter(self.edges)

        def choose(candidates):
            try:
                edge = next(script)
            except StopIteration:
                raise InvalidScript(
                    "script exhausted while diagonal edges remain: "
                    + " ".join(str(e) for e in candidates)
                ) from None
            if edge not in candidates:
                raise InvalidScript(f"{edge} is not a diagonal edge at this step")
            return edge

        return choose


Strategy = Union[Lexicographic, SeededRandom, Scripted]


class Step(NamedTuple):
    index: int
    edge: Edge
    dummy: VertexId


@dataclass
class RunTrace:
    steps: list[Step] = field(default_factory=list)
    result: Poset | None = None

    def __len__(self):
        return len(self.steps)


def sequential_steps(p: Poset, strategy: Strategy | None = None) -> Iterator[tuple[Step, Poset]]:
    """Yield each step of the sequential closure with the poset it produced."""
    choose = (strategy or Lexicographic()).chooser()
    limit = len(p.covers)
    current = p
    m = 0
    while True:
        diagonals = n_diag_indices(current)
        if not diagonals:
            return
        if m >= limit:
            raise RuntimeError(
                f"internal error: sequential closure exceeded {limit} steps on {p!r}"
            )
        vs = current.vertices
        candidates = [Edge(vs[i], vs[j]) for i, j in sorted(diagonals)]
        edge = choose(candidates)
        current, created = _subdivide(current, [edge])
        m += 1
        (dummy,) = created.values()
        yield Step(m, edge, dummy), current


def sequential_closure(p: Poset, strategy: Strategy | None = None) -> RunTrace:
    """Subdivide one diagonal edge at a time until no N remains."""
    trace = RunTrace(result=p)
    for step, current in sequential_steps(p, strategy):
        trace.steps.append(step)
        trace.result = current
    return trace
