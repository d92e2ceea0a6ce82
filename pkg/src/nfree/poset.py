"""Finite posets stored as bitset up-sets over a canonically ordered vertex list.

Vertex ``i`` of a :class:`Poset` is ``P.vertices[i]``; every mask below uses bit
``i`` for that vertex.  Vertices are sorted by their canonical key, so index
order, iteration order and the order of every derived listing coincide.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple, Union

from .errors import CycleError, DuplicateElement, InvalidLabel, UnknownElement

DUMMY_PREFIX = "_d."
_FORBIDDEN = re.compile(r"[\s<#]")


class VertexId:
    """Common base of :class:`Original` and :class:`Dummy`.

    Equality, hashing and ordering go through ``key``: originals compare by
    label and sort before every dummy; dummies sort by (lower, upper, round).
    """

    __slots__ = ("key", "_hash")

    def __eq__(self, other):
        if not isinstance(other, VertexId):
            return NotImplemented
        return self.key == other.key

    def __ne__(self, other):
        if not isinstance(other, VertexId):
            return NotImplemented
        return self.key != other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key


class Original(VertexId):
    __slots__ = ("label",)

    def __init__(self, label: str):
        check_label(label)
        self.label = label
        self.key = (0, label)
        self._hash = hash(self.key)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"Original({self.label!r})"


class Dummy(VertexId):
    """A vertex inserted on the cover ``lower < upper``; ``round`` counts repeats."""

    __slots__ = ("lower", "upper", "round")

    def __init__(self, lower: VertexId, upper: VertexId, round: int = 1):
        if not isinstance(round, int) or round < 1:
            raise ValueError(f"dummy round must be a positive integer, got {round!r}")
        self.lower = lower
        self.upper = upper
        self.round = round
        self.key = (1, lower.key, upper.key, round)
        self._hash = hash(self.key)

    def __str__(self):
        return f"{DUMMY_PREFIX}{self.lower}.{self.upper}.{self.round}"

    def __repr__(self):
        return f"Dummy({self.lower!r}, {self.upper!r}, {self.round})"


Label = Union[str, VertexId]


def check_label(label) -> None:
    if not isinstance(label, str) or not label:
        raise InvalidLabel(f"element labels must be nonempty strings, got {label!r}")
    if _FORBIDDEN.search(label):
        raise InvalidLabel(f"label {label!r} contains whitespace, '<' or '#'")
    if label.startswith(DUMMY_PREFIX):
        raise InvalidLabel(f"label {label!r} uses the reserved prefix {DUMMY_PREFIX!r}")


def as_vertex(x: Label) -> VertexId:
    if isinstance(x, VertexId):
        return x
    return Original(x)


class Edge(NamedTuple):
    """A covering pair ``lower < upper``."""

    lower: VertexId
    upper: VertexId

    def __str__(self):
        return f"{self.lower}<{self.upper}"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transitive_closure_masks(adjacency: list[int]) -> list[int]:
    """Warshall's algorithm on bit rows; returns strict reachability masks."""
    up = list(adjacency)
    n = len(up)
    for k in range(n):
        bit = 1 << k
        row = up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row
    return up


class Poset:
    """An immutable finite strict order together with its Hasse diagram.

    ``upsets[i]`` / ``downsets[i]`` are the strict up- and down-sets of vertex
    ``i`` and ``upper_covers[i]`` / ``lower_covers[i]`` its diagram neighbours.
    Any relation whose transitive closure is a strict order is accepted;
    ``covers`` is always the transitive reduction.
    """

    __slots__ = (
        "vertices",
        "upsets",
        "downsets",
        "upper_covers",
        "lower_covers",
        "_index",
        "_covers",
        "_hash",
    )

    def __init__(self, vertices: Iterable[VertexId] = (), relations: Iterable[tuple] = ()):
        vs = sorted(vertices)
        for prev, cur in zip(vs, vs[1:]):
            if prev == cur:
                raise DuplicateElement(f"element {cur} declared twice")
        index = {v: i for i, v in enumerate(vs)}
        adjacency = [0] * len(vs)
        for x, y in relations:
            i = _lookup(index, x)
            j = _lookup(index, y)
            if i == j:
                raise CycleError(f"relation {vs[i]}<{vs[i]} is reflexive")
            adjacency[i] |= 1 << j
        up = transitive_closure_masks(adjacency)
        for i, mask in enumerate(up):
            if mask >> i & 1:
                raise CycleError(f"order relation has a cycle through {vs[i]}")
        self._setup(tuple(vs), index, up)

    @classmethod
    def from_upsets(cls, vertices: tuple, upsets: list[int], index: dict | None = None) -> "Poset":
        """Build from canonically sorted vertices and transitively closed up-sets.

        No validation; used by the enumerator and the subdivision code.
        """
        obj = cls.__new__(cls)
        if index is None:
            index = {v: i for i, v in enumerate(vertices)}
        obj._setup(vertices, index, upsets)
        return obj

    def _setup(self, vertices, index, up):
        n = len(vertices)
        down = [0] * n
        ucov = [0] * n
        for i in range(n):
            above = up[i]
            bit = 1 << i
            shadow = 0
            for j in iter_bits(above):
                down[j] |= bit
                shadow |= up[j]
            ucov[i] = above & ~shadow
        dcov = [0] * n
        for i in range(n):
            bit = 1 << i
            for j in iter_bits(ucov[i]):
                dcov[j] |= bit
        self.vertices = vertices
        self._index = index
        self.upsets = tuple(up)
        self.downsets = tuple(down)
        self.upper_covers = tuple(ucov)
        self.lower_covers = tuple(dcov)
        self._covers = None
        self._hash = None

    # -- element access -------------------------------------------------

    def index(self, x: Label) -> int:
        return _lookup(self._index, x)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, x):
        try:
            return as_vertex(x) in self._index
        except InvalidLabel:
            return False

    def vertex(self, name: str) -> VertexId:
        """Look a vertex up by its printed name (dummies included)."""
        for v in self.vertices:
            if str(v) == name:
                return v
        raise UnknownElement(f"unknown element {name!r}")

    # -- relations -------------------------------------------------------

    def leq(self, x: Label, y: Label) -> bool:
        i, j = self.index(x), self.index(y)
        return i == j or bool(self.upsets[i] >> j & 1)

    def lt(self, x: Label, y: Label) -> bool:
        i, j = self.index(x), self.index(y)
        return bool(self.upsets[i] >> j & 1)

    def is_cover(self, x: Label, y: Label) -> bool:
        i, j = self.index(x), self.index(y)
        return bool(self.upper_covers[i] >> j & 1)

    def incomparable(self, x: Label, y: Label) -> bool:
        i, j = self.index(x), self.index(y)
        return i != j and not ((self.upsets[i] | self.downsets[i]) >> j & 1)

    def incomparable_mask(self, i: int) -> int:
        full = (1 << len(self.vertices)) - 1
        return full & ~(self.upsets[i] | self.downsets[i] | (1 << i))

    @property
    def covers(self) -> tuple[Edge, ...]:
        """Covering pairs in canonical order."""
        if self._covers is None:
            vs = self.vertices
            self._covers = tuple(
                Edge(vs[i], vs[j]) for i in range(len(vs)) for j in iter_bits(self.upper_covers[i])
            )
        return self._covers

    @property
    def closure(self) -> frozenset:
        """All strict pairs ``(x, y)`` with ``x < y``."""
        vs = self.vertices
        return frozenset((vs[i], vs[j]) for i in range(len(vs)) for j in iter_bits(self.upsets[i]))

    def cover_index_pairs(self) -> Iterator[tuple[int, int]]:
        for i, mask in enumerate(self.upper_covers):
            for j in iter_bits(mask):
                yield i, j

    # -- derived posets ---------------------------------------------------

    def dual(self) -> "Poset":
        obj = Poset.__new__(Poset)
        obj.vertices = self.vertices
        obj._index = self._index
        obj.upsets = self.downsets
        obj.downsets = self.upsets
        obj.upper_covers = self.lower_covers
        obj.lower_covers = self.upper_covers
        obj._covers = None
        obj._hash = None
        return obj

    def restrict(self, subset: Iterable[Label]) -> "Poset":
        """The induced subposet on ``subset``."""
        keep = {as_vertex(x) for x in subset}
        for v in keep:
            self.index(v)
        return Poset(keep, [(x, y) for x, y in self.closure if x in keep and y in keep])

    def relabel(self, rename) -> "Poset":
        """Apply an injective vertex renaming function."""
        return Poset([rename(v) for v in self.vertices], [(rename(x), rename(y)) for x, y in self.closure])

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.vertices == other.vertices and self.upsets == other.upsets

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.upsets))
        return self._hash

    def __repr__(self):
        body = ", ".join(str(e) for e in self.covers)
        names = " ".join(str(v) for v in self.vertices)
        return f"Poset([{names}] {{{body}}})"


def _lookup(index: dict, x) -> int:
    try:
        return index[as_vertex(x)]
    except (KeyError, InvalidLabel):
        raise UnknownElement(f"unknown element {x!s}") from None


def from_relation(elements: Iterable[Label], pairs: Iterable[tuple[Label, Label]] = ()) -> Poset:
    """Build a poset from declared elements and any generating set of ``x < y`` pairs."""
    vertices = []
    seen = set()
    for x in elements:
        v = as_vertex(x)
        if v in seen:
            raise DuplicateElement(f"element {v} declared twice")
        seen.add(v)
        vertices.append(v)
    relations = []
    for x, y in pairs:
        vx, vy = as_vertex(x), as_vertex(y)
        for v in (vx, vy):
            if v not in seen:
                raise UnknownElement(f"pair endpoint {v} is not a declared element")
        relations.append((vx, vy))
    return Poset(vertices, relations)


def equals(p: Poset, q: Poset) -> bool:
    return p == q


def dual(p: Poset) -> Poset:
    return p.dual()


def leq(p: Poset, x: Label, y: Label) -> bool:
    return p.leq(x, y)


def covers(p: Poset, x: Label, y: Label) -> bool:
    return p.is_cover(x, y)


def incomparable(p: Poset, x: Label, y: Label) -> bool:
    return p.incomparable(x, y)


# -- chains and antichains -----------------------------------------------------


def _chain_paths(p: Poset) -> list[list[int]]:
    # A maximal chain of a finite poset is a diagram path from a minimal to a maximal element.
    ucov = p.upper_covers
    out = []

    def walk(path):
        nxt = ucov[path[-1]]
        if not nxt:
            out.append(list(path))
            return
        for j in iter_bits(nxt):
            path.append(j)
            walk(path)
            path.pop()

    for i in range(len(p.vertices)):
        if not p.lower_covers[i]:
            walk([i])
    return out


def maximal_chain_masks(p: Poset) -> list[int]:
    return [sum(1 << i for i in path) for path in _chain_paths(p)]


def maximal_antichain_masks(p: Poset) -> list[int]:
    """Maximal cliques of the incomparability graph (Bron-Kerbosch with pivoting)."""
    n = len(p.vertices)
    inc = [p.incomparable_mask(i) for i in range(n)]
    out = []

    def expand(r, cand, excl):
        if not cand and not excl:
            out.append(r)
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: (cand & inc[u]).bit_count())
        for v in iter_bits(cand & ~inc[pivot]):
            expand(r | 1 << v, cand & inc[v], excl & inc[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    if n:
        expand(0, (1 << n) - 1, 0)
    return out


def maximal_chains(p: Poset) -> list[tuple[VertexId, ...]]:
    """Every maximal chain, listed bottom-up, in depth-first diagram order."""
    vs = p.vertices
    return [tuple(vs[i] for i in path) for path in _chain_paths(p)]


def maximal_antichains(p: Poset) -> list[tuple[VertexId, ...]]:
    vs = p.vertices
    ordered = sorted(tuple(iter_bits(m)) for m in maximal_antichain_masks(p))
    return [tuple(vs[i] for i in idx) for idx in ordered]
