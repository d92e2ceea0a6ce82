"""Brute-force ground truth: labeled poset enumeration, minimality search, confluence fuzzing."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import BoundExceeded, MinimalityViolation
from .npattern import a_set, is_cac, is_n_free, is_series_parallel, n_diag
from .poset import Edge, Original, Poset, iter_bits
from .subdivision import Lexicographic, SeededRandom, grillet_closure, sequential_closure, subdivide

EXHAUSTIVE_MAX = 6
LONG_RUNNING_MAX = 7
MINIMALITY_MAX_COVERS = 12

FILTERS: dict[str, Callable[[Poset], bool]] = {
    "n-free": is_n_free,
    "has-n": lambda p: not is_n_free(p),
    "cac": is_cac,
    "series-parallel": is_series_parallel,
}


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    filter: str | None = None
    long_running: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise BoundExceeded("n must be at least 1")
        limit = LONG_RUNNING_MAX if self.long_running else EXHAUSTIVE_MAX
        if self.n > limit:
            hint = "" if self.long_running else " (n=7 needs the long-running flag)"
            raise BoundExceeded(f"exhaustive enumeration is limited to n <= {limit}{hint}")
        if self.filter is not None and self.filter not in FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}; choose from {sorted(FILTERS)}")


def element_labels(n: int) -> tuple[Original, ...]:
    return tuple(Original(f"v{i}") for i in range(1, n + 1))


def _extensions(n: int) -> Iterator[list[int]]:
    # Each poset on v1..vk restricts to a unique poset on v1..v(k-1); the new
    # element is placed below an up-closed set and above a down-closed set.
    def grow(up: list[int], down: list[int]):
        k = len(up)
        if k == n:
            yield up
            return
        subsets = range(1 << k)
        ideals = [s for s in subsets if all(down[i] & ~s == 0 for i in iter_bits(s))]
        filters = [s for s in subsets if all(up[i] & ~s == 0 for i in iter_bits(s))]
        bit = 1 << k
        for lower in ideals:
            common = (1 << k) - 1
            for i in iter_bits(lower):
                common &= up[i]
            for upper in filters:
                if upper & ~common:
                    continue
                new_up = [u | bit | upper if lower >> i & 1 else u for i, u in enumerate(up)]
                new_up.append(upper)
                new_down = [d | bit | lower if upper >> i & 1 else d for i, d in enumerate(down)]
                new_down.append(lower)
                yield from grow(new_up, new_down)

    yield from grow([], [])


def enumerate_posets(spec: EnumerationSpec | int) -> Iterator[Poset]:
    """Every labeled poset on ``v1..vn`` exactly once, in a fixed order."""
    if isinstance(spec, int):
        spec = EnumerationSpec(spec)
    vertices = element_labels(spec.n)
    index = {v: i for i, v in enumerate(vertices)}
    keep = FILTERS[spec.filter] if spec.filter else None
    for up in _extensions(spec.n):
        p = Poset.from_upsets(vertices, up, index)
        if keep is None or keep(p):
            yield p


def enumerate_closures_bruteforce(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Independent enumerator: orient or omit every pair, keep transitive results."""
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel.add((i, j))
            elif c == 2:
                rel.add((j, i))
        if all((x, z) in rel for x, y in rel for y2, z in rel if y == y2):
            yield frozenset(rel)


def closure_indices(p: Poset) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i, mask in enumerate(p.upsets) for j in iter_bits(mask))


# -- minimality -------------------------------------------------------------------


def minimality_oracle(p: Poset) -> frozenset[Edge]:
    """Exhaustively find the inclusion-minimal cover sets whose subdivision is N-free.

    Raises :class:`MinimalityViolation` unless exactly one such set exists, it
    equals ``n_diag(p) | a_set(p)``, and no proper subset of it works.
    """
    edges = p.covers
    m = len(edges)
    if m > MINIMALITY_MAX_COVERS:
        raise BoundExceeded(f"{m} covers exceed the search bound {MINIMALITY_MAX_COVERS}")
    free = [is_n_free(subdivide(p, [edges[i] for i in iter_bits(mask)])) for mask in range(1 << m)]
    # below[mask]: some subset of mask (itself included) gives an N-free subdivision
    below = list(free)
    for mask in range(1 << m):
        if not below[mask]:
            below[mask] = any(below[mask & ~(1 << i)] for i in iter_bits(mask))
    minimal = [
        mask
        for mask in range(1 << m)
        if free[mask] and not any(below[mask & ~(1 << i)] for i in iter_bits(mask))
    ]
    if len(minimal) != 1:
        found = [sorted(str(edges[i]) for i in iter_bits(mask)) for mask in minimal]
        raise MinimalityViolation(f"expected a unique minimal N-free edge set, found {found}")
    best = frozenset(edges[i] for i in iter_bits(minimal[0]))
    expected = n_diag(p) | a_set(p)
    if best != expected:
        raise MinimalityViolation(
            f"minimal set {sorted(map(str, best))} differs from n_diag | a_set "
            f"{sorted(map(str, expected))}"
        )
    return best


# -- confluence ---------------------------------------------------------------------


@dataclass
class ConfluenceReport:
    passed: bool
    steps: int
    expected_steps: int
    seeds: list[int] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)


def distinct_seeds(trials: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    seeds: list[int] = []
    while len(seeds) < trials:
        s = rng.getrandbits(64)
        if s not in seeds:
            seeds.append(s)
    return seeds


def confluence_fuzz(p: Poset, trials: int, seed: int, reference: Poset | None = None) -> ConfluenceReport:
    """Run the sequential closure under Lexicographic and ``trials`` random strategies.

    Passes when every run ends on the same poset (``reference`` too, if given)
    after exactly ``|n_diag(p)| + |a_set(p)|`` steps.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    expected_steps = len(n_diag(p)) + len(a_set(p))
    seeds = distinct_seeds(trials, seed)
    base = sequential_closure(p, Lexicographic())
    failures = []
    if reference is not None and base.result != reference:
        failures.append("lexicographic result differs from the reference poset")
    if len(base) != expected_steps:
        failures.append(f"lexicographic run took {len(base)} steps, expected {expected_steps}")
    for s in seeds:
        run = sequential_closure(p, SeededRandom(s))
        if run.result != base.result:
            failures.append(f"seed {s}: result differs from the lexicographic run")
        if len(run) != expected_steps:
            failures.append(f"seed {s}: {len(run)} steps, expected {expected_steps}")
    return ConfluenceReport(not failures, len(base), expected_steps, seeds, failures)


def closure_report(p: Poset, trials: int = 5, seed: int = 0) -> ConfluenceReport:
    return confluence_fuzz(p, trials, seed, reference=grillet_closure(p))
