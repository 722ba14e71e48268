"""Brute-force ground truth, deliberately naive and exhaustive.

These routines re-derive everything from first principles (subset scans,
convex-hull membership, bijective fillings, circuit enumeration) so that
the main modules can be checked against them.  Size caps keep every call
at desk scale.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .decompose import BorderStrip
from .errors import TooLarge
from .paths import PathWord, Region
from .polytope import Facet, certify_facet_candidates, h_representation
from .ratlinalg import in_convex_hull


def brute_bases(region: Region) -> set[frozenset[int]]:
    """Every r-subset whose N-step path stays inside the region."""
    n = region.size
    if n > 12:
        raise TooLarge("brute basis scan is capped at 12 ground elements")
    p = region.lower.profile
    q = region.upper.profile
    found = set()
    for subset in combinations(range(1, n + 1), region.r):
        chosen = set(subset)
        h = 0
        ok = True
        for i in range(1, n + 1):
            if i in chosen:
                h += 1
            if not p[i] <= h <= q[i]:
                ok = False
                break
        if ok:
            found.add(frozenset(subset))
    return found


def brute_adjacent(verts: list[tuple[int, ...]], i: int, j: int) -> bool:
    """Midpoint test: an edge iff the midpoint escapes the hull of the others."""
    if len(verts) > 40:
        raise TooLarge("adjacency oracle is capped at 40 vertices")
    mid = [Fraction(a + b, 2) for a, b in zip(verts[i], verts[j])]
    others = [v for k, v in enumerate(verts) if k not in (i, j)]
    return not in_convex_hull(others, mid)


def brute_facets(region: Region) -> list[Facet]:
    """Rank-certify every inequality of the full prefix/box description."""
    if region.size > 9:
        raise TooLarge("facet oracle is capped at 9 ground elements")
    n = region.size
    candidates = []
    for cons in h_representation(region).inequalities:
        support = [t for t, c in enumerate(cons.coeffs) if c]
        if len(support) == 1:
            kind = "x_upper" if cons.rel == "<=" else "x_lower"
            position = support[0] + 1
        else:
            kind = "prefix_upper" if cons.rel == "<=" else "prefix_lower"
            position = len(support)
        candidates.append((kind, position, cons))
    return certify_facet_candidates(region, candidates)


def brute_syt(strip: BorderStrip) -> int:
    """Count standard fillings directly: increase East, decrease North."""
    size = len(strip)
    if size > 9:
        raise TooLarge("filling oracle is capped at 9 boxes")
    dirs = strip.direction_word
    used = [False] * (size + 1)

    def place(i: int, prev: int) -> int:
        if i == size:
            return 1
        if i == 0:
            values: Iterator[int] = range(1, size + 1)
        elif dirs[i - 1] == "R":
            values = range(prev + 1, size + 1)
        else:
            values = range(1, prev)
        total = 0
        for v in values:
            if not used[v]:
                used[v] = True
                total += place(i + 1, v)
                used[v] = False
        return total

    return place(0, 0)


def brute_components(region: Region) -> list[frozenset[int]]:
    """Classes of the relation "lies on a common circuit", circuits enumerated raw."""
    n = region.size
    if n > 8:
        raise TooLarge("component oracle is capped at 8 ground elements")
    bases_sets = brute_bases(region)
    ground = list(range(1, n + 1))

    def independent(subset: frozenset[int]) -> bool:
        return any(subset <= b for b in bases_sets)

    dependents = [
        frozenset(c)
        for size in range(1, n + 1)
        for c in combinations(ground, size)
        if not independent(frozenset(c))
    ]
    circuits = [
        d for d in dependents if not any(o < d for o in dependents if o != d)
    ]
    parent = {e: e for e in ground}

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for circuit in circuits:
        members = sorted(circuit)
        for other in members[1:]:
            parent[find(other)] = find(members[0])
    classes: dict[int, set[int]] = {}
    for e in ground:
        classes.setdefault(find(e), set()).add(e)
    return sorted((frozenset(v) for v in classes.values()), key=min)


def all_paths(m: int, r: int) -> list[PathWord]:
    """Every word with m E steps and r N steps, in lexicographic order."""
    out = []
    for north in combinations(range(m + r), r):
        word = ["E"] * (m + r)
        for i in north:
            word[i] = "N"
        out.append(PathWord("".join(word)))
    out.sort(key=lambda p: p.word)
    return out


def all_regions(max_size: int, connected_only: bool = False) -> Iterator[Region]:
    """Exhaustive deterministic sweep of regions with at most ``max_size`` elements."""
    for n in range(1, max_size + 1):
        for r in range(0, n + 1):
            paths = all_paths(n - r, r)
            for lower in paths:
                lp = lower.profile
                for upper in paths:
                    up = upper.profile
                    if all(a <= b for a, b in zip(lp, up)):
                        if connected_only and any(
                            lp[i] == up[i] for i in range(1, n)
                        ):
                            continue
                        yield Region(lower, upper)


def sqrt_one_minus_4t_series(order: int) -> list[Fraction]:
    """Exact Taylor coefficients of sqrt(1 - 4t) up to the given order."""
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * Fraction(2 * (2 * k - 3), k))
    return coeffs


def gap_area_series(order: int) -> list[Fraction]:
    """Series of (1 - 2t - sqrt(1-4t)) / (4t(1-4t)), the diagonal-gap totals."""
    sq = sqrt_one_minus_4t_series(order + 2)
    numerator = [-c for c in sq]
    numerator[0] += 1
    numerator[1] -= 2
    quarter = [numerator[k + 1] / 4 for k in range(order + 1)]
    out = []
    for k in range(order + 1):
        out.append(sum(quarter[i] * 4 ** (k - i) for i in range(k + 1)))
    return out
