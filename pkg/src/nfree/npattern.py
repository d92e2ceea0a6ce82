"""Detection of N patterns and the edge sets built from their diagonals.

An N on ``a, b, c, d`` has the covers ``b < c``, ``a < c``, ``b < d`` with ``a``
and ``d`` incomparable; ``(b, c)`` is its diagonal edge.  Three variants are
recognised (see :class:`NForm`).  Edge sets are returned as ``frozenset`` of
:class:`~nfree.poset.Edge`; ``sorted()`` gives the canonical order.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .poset import Edge, Poset, VertexId, iter_bits, maximal_antichain_masks, maximal_chain_masks


class NForm(str, enum.Enum):
    N = "N"
    """Three covers and an incomparable pair ``(a, d)``."""
    NPRIME = "NPrime"
    """Only ``b < c`` must be a cover; ``a < c`` and ``b < d`` may be long."""
    NDIAG = "NDiag"
    """An N of the diagram: three covers and ``(a, d)`` not a cover."""


class NWitness(NamedTuple):
    a: VertexId
    b: VertexId
    c: VertexId
    d: VertexId
    form: NForm

    @property
    def diagonal(self) -> Edge:
        return Edge(self.b, self.c)


def _witness_indices(p: Poset, form: NForm):
    up, down = p.upsets, p.downsets
    ucov, dcov = p.upper_covers, p.lower_covers
    for b, c in p.cover_index_pairs():
        if form is NForm.NPRIME:
            lowers, uppers = down[c], up[b]
        else:
            lowers, uppers = dcov[c], ucov[b]
        lowers &= ~(1 << b)
        uppers &= ~(1 << c)
        if not lowers or not uppers:
            continue
        for a in iter_bits(lowers):
            if form is NForm.NDIAG:
                ds = uppers & ~ucov[a] & ~(1 << a)
            else:
                ds = uppers & ~(up[a] | down[a] | 1 << a)
            for d in iter_bits(ds):
                yield a, b, c, d


def find_ns(p: Poset, form: NForm | str = NForm.N) -> list[NWitness]:
    """All witnesses ``(a, b, c, d)`` of the requested form, sorted canonically."""
    form = NForm(form)
    vs = p.vertices
    return [
        NWitness(vs[a], vs[b], vs[c], vs[d], form)
        for a, b, c, d in sorted(_witness_indices(p, form))
    ]


def n_diag_indices(p: Poset) -> set[tuple[int, int]]:
    up, down = p.upsets, p.downsets
    ucov, dcov = p.upper_covers, p.lower_covers
    out = set()
    for b, c in p.cover_index_pairs():
        uppers = ucov[b] & ~(1 << c)
        if not uppers:
            continue
        for a in iter_bits(dcov[c] & ~(1 << b)):
            if uppers & ~(up[a] | down[a]):
                out.add((b, c))
                break
    return out


def nd_diag_indices(p: Poset) -> set[tuple[int, int]]:
    ucov, dcov = p.upper_covers, p.lower_covers
    out = set()
    for b, c in p.cover_index_pairs():
        uppers = ucov[b] & ~(1 << c)
        if not uppers:
            continue
        for a in iter_bits(dcov[c] & ~(1 << b)):
            if uppers & ~ucov[a]:
                out.add((b, c))
                break
    return out


def a_set_indices(p: Poset, ndiag: set[tuple[int, int]] | None = None) -> set[tuple[int, int]]:
    # Witnesses a < c and b < d range over the whole order, not only covers.
    if ndiag is None:
        ndiag = n_diag_indices(p)
    if not ndiag:
        return set()
    up, down = p.upsets, p.downsets
    n = len(p.vertices)
    full = (1 << n) - 1
    diag_above = [0] * n  # diag_above[x]: mask of y with (x, y) diagonal
    diag_below = [0] * n
    for x, y in ndiag:
        diag_above[x] |= 1 << y
        diag_below[y] |= 1 << x
    out = set()
    for b, c in p.cover_index_pairs():
        if (b, c) in ndiag:
            continue
        inc_b = full & ~(up[b] | down[b] | 1 << b)
        inc_c = full & ~(up[c] | down[c] | 1 << c)
        lows = down[c] & inc_b
        highs = up[b] & inc_c
        if not lows or not highs:
            continue
        if lows & diag_below[c] or highs & diag_above[b]:
            out.add((b, c))
    return out


def _edges(p: Poset, pairs) -> frozenset[Edge]:
    vs = p.vertices
    return frozenset(Edge(vs[i], vs[j]) for i, j in pairs)


def n_diag(p: Poset) -> frozenset[Edge]:
    """Diagonal edges of all N's of ``p``."""
    return _edges(p, n_diag_indices(p))


def nd_diag(p: Poset) -> frozenset[Edge]:
    """Diagonal edges of all N's of the diagram of ``p``."""
    return _edges(p, nd_diag_indices(p))


def a_set(p: Poset) -> frozenset[Edge]:
    """Covers outside ``n_diag(p)`` that become diagonal once ``n_diag(p)`` is subdivided.

    ``(b, c)`` qualifies when some ``a < c`` and ``b < d`` exist with ``a, b``
    and ``c, d`` incomparable and ``(a, c)`` or ``(b, d)`` a diagonal edge.
    """
    return _edges(p, a_set_indices(p))


def is_n_free(p: Poset) -> bool:
    up, down = p.upsets, p.downsets
    ucov, dcov = p.upper_covers, p.lower_covers
    for b, c in p.cover_index_pairs():
        uppers = ucov[b] & ~(1 << c)
        if not uppers:
            continue
        for a in iter_bits(dcov[c] & ~(1 << b)):
            if uppers & ~(up[a] | down[a]):
                return False
    return True


def is_cac(p: Poset) -> bool:
    """Chain-antichain completeness: every maximal chain meets every maximal antichain."""
    chains = maximal_chain_masks(p)
    antichains = maximal_antichain_masks(p)
    return all(ch & ac for ch in chains for ac in antichains)


def is_series_parallel(p: Poset) -> bool:
    """True when no four elements induce exactly the comparabilities of an N."""
    up, down = p.upsets, p.downsets
    n = len(p.vertices)
    full = (1 << n) - 1
    comparable = [up[i] | down[i] | 1 << i for i in range(n)]
    for b in range(n):
        for c in iter_bits(up[b]):
            lows = down[c] & ~comparable[b]
            highs = up[b] & ~comparable[c]
            for a in iter_bits(lows):
                if highs & full & ~comparable[a]:
                    return False
    return True
