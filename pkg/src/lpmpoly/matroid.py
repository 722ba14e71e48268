"""The transversal matroid of a region: presentations, bases, components, minors.

Ground set is 1..m+r.  The i-th interval runs from the position of the i-th
N step of the upper path to that of the lower path; a set is independent
when it is a partial transversal of those intervals, and the bases are
exactly the N-position sets of the paths inside the region.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import EmptyFace, WrongCardinality
from .paths import PathWord, Region, enumerate_paths, intersection_vertices, path_from_profile


@dataclass(frozen=True)
class IntervalPresentation:
    """One integer interval per rank, both endpoint lists strictly increasing."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for lo, hi in self.intervals:
            if lo > hi:
                raise ValueError(f"empty interval [{lo},{hi}]")
        lows = [lo for lo, _ in self.intervals]
        highs = [hi for _, hi in self.intervals]
        if sorted(set(lows)) != lows or sorted(set(highs)) != highs:
            raise ValueError("interval endpoints must be strictly increasing")


@dataclass(frozen=True)
class BasisVector:
    """0/1 incidence vector of a basis together with its support."""

    coords: tuple[int, ...]
    support: tuple[int, ...]


class Block(NamedTuple):
    """Ground-set interval [start, stop] flagged loop / coloop / block."""

    start: int
    stop: int
    kind: str


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[Block, ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def presentation(region: Region) -> IntervalPresentation:
    """Read the intervals off the N positions of the upper and lower paths."""
    lows = region.upper.north_positions()
    highs = region.lower.north_positions()
    return IntervalPresentation(tuple(zip(lows, highs)))


def is_basis(region: Region, subset: Iterable[int]) -> bool:
    """True iff the path with N steps exactly on ``subset`` stays in the region."""
    s = set(subset)
    if len(s) != region.r:
        raise WrongCardinality(f"expected {region.r} elements, got {len(s)}")
    p = region.lower.profile
    q = region.upper.profile
    h = 0
    for i in range(1, region.size + 1):
        if i in s:
            h += 1
        if not p[i] <= h <= q[i]:
            return False
    return True


def is_independent(pres: IntervalPresentation, subset: Iterable[int]) -> bool:
    """Greedy partial-transversal test: match each element to the tightest interval.

    Elements are scanned in increasing order and each takes the unused
    interval with the smallest upper endpoint still containing it; for
    interval systems this greedy is exact.
    """
    used = [False] * len(pres.intervals)
    for e in sorted(set(subset)):
        best = None
        for idx, (lo, hi) in enumerate(pres.intervals):
            if not used[idx] and lo <= e <= hi:
                if best is None or hi < pres.intervals[best][1]:
                    best = idx
        if best is None:
            return False
        used[best] = True
    return True


def basis_vector_of_path(path: PathWord) -> BasisVector:
    coords = tuple(1 if s == "N" else 0 for s in path.word)
    return BasisVector(coords, path.north_positions())


def bases(region: Region) -> Iterator[BasisVector]:
    """Basis vectors in lexicographic coordinate order, bijective with the paths."""
    for path in enumerate_paths(region):
        yield basis_vector_of_path(path)


def components(region: Region) -> ComponentPartition:
    """Split the ground set at the interior points where the bounding paths meet.

    Each length-1 segment is a forced step: a loop when both paths take E
    there, a coloop when both take N.
    """
    p = region.lower.profile
    q = region.upper.profile
    touch = [i for i in range(region.size + 1) if p[i] == q[i]]
    blocks = []
    for a, b in zip(touch, touch[1:]):
        if b - a == 1:
            kind = "coloop" if p[b] == p[a] + 1 else "loop"
        else:
            kind = "block"
        blocks.append(Block(a + 1, b, kind))
    return ComponentPartition(tuple(blocks))


def is_connected(region: Region) -> bool:
    return len(intersection_vertices(region)) == 2


def delete(region: Region, i: int, value: int) -> Region:
    """Fix coordinate ``i`` to ``value`` and drop it; the surviving paths form a region.

    The result's paths are verified to be exactly the projections of the
    parent's paths with step ``i`` equal to the requested letter.
    """
    if value not in (0, 1):
        raise ValueError("value must be 0 or 1")
    if region.size == 1:
        raise ValueError("cannot delete the last ground element")
    want = "N" if value else "E"
    survivors = [
        path for path in enumerate_paths(region) if path.word[i - 1] == want
    ]
    if not survivors:
        raise EmptyFace(f"no basis has coordinate {i} equal to {value}")
    words = [p.word[: i - 1] + p.word[i:] for p in survivors]
    profiles = [PathWord(w).profile for w in words]
    low = tuple(min(col) for col in zip(*profiles))
    high = tuple(max(col) for col in zip(*profiles))
    child = Region(path_from_profile(low), path_from_profile(high))
    if {p.word for p in enumerate_paths(child)} != set(words):
        raise AssertionError("projected path family is not a dominance interval")
    return child
