"""The polytope of a region: convex hull of the 0/1 basis vectors.

Facets are never trusted from a closed-form case analysis alone: candidate
inequalities (corner prefix bounds plus all box bounds) are certified by
checking that their tight vertex sets have affine rank dim - 1, and
duplicate inequalities cutting the same facet are collapsed to a canonical
representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DisconnectedRegion, NotAFacet, NotGeneralizedCatalan
from .matroid import bases, components, delete, is_connected
from .paths import Region, area_below, enumerate_paths, path_from_profile
from .ratlinalg import affine_rank
from .volume import catalan_area, catalan_number

PREFER_BOX_LOWER, PREFER_BOX_UPPER, PREFER_PREFIX_UPPER, PREFER_PREFIX_LOWER = range(4)


@dataclass(frozen=True)
class LinearConstraint:
    """coeffs . x  rel  rhs with rel one of "<=", ">=", "="."""

    coeffs: tuple[int, ...]
    rel: str
    rhs: int

    def holds(self, point: Sequence[int]) -> bool:
        v = sum(c * x for c, x in zip(self.coeffs, point))
        if self.rel == "<=":
            return v <= self.rhs
        if self.rel == ">=":
            return v >= self.rhs
        return v == self.rhs

    def tight(self, point: Sequence[int]) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, point)) == self.rhs

    def to_json_dict(self, tight_vertices: tuple[int, ...] | None = None) -> dict:
        d = {"coeffs": list(self.coeffs), "rel": self.rel, "rhs": self.rhs}
        if tight_vertices is not None:
            d["tight_vertices"] = list(tight_vertices)
        return d


@dataclass(frozen=True)
class HRepresentation:
    equalities: tuple[LinearConstraint, ...]
    inequalities: tuple[LinearConstraint, ...]


@dataclass(frozen=True)
class Facet:
    """A certified facet: the inequality, its tight vertices, and its provenance.

    ``kind`` is one of "x_lower", "x_upper", "prefix_upper", "prefix_lower";
    ``position`` is the coordinate (box kinds) or prefix length (prefix kinds).
    """

    constraint: LinearConstraint
    tight: tuple[int, ...]
    kind: str
    position: int


@dataclass(frozen=True)
class RunLengthForm:
    """Alternating-run encoding of a path word.

    Prefix facets sit at run boundaries: the ends of the upper path's E
    runs and of the lower path's N runs.
    """

    runs: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, path) -> "RunLengthForm":
        return cls(path.run_lengths())

    @property
    def boundaries(self) -> tuple[int, ...]:
        """Ground positions at the end of each run."""
        out = []
        total = 0
        for _, length in self.runs:
            total += length
            out.append(total)
        return tuple(out)

    def run_ends(self, letter: str, interior_only: bool = True) -> list[int]:
        """Boundary positions of the runs of ``letter``."""
        total = sum(length for _, length in self.runs)
        return [
            b
            for (step, _), b in zip(self.runs, self.boundaries)
            if step == letter and not (interior_only and b == total)
        ]


def vertices(region: Region) -> list[tuple[int, ...]]:
    """The basis vectors; every one is a vertex of the 0/1 polytope."""
    return [bv.coords for bv in bases(region)]


def dimension(region: Region) -> int:
    return region.size - components(region).count


def edges(region: Region) -> list[tuple[int, int]]:
    """Vertex-index pairs whose incidence vectors differ by a single swap."""
    verts = vertices(region)
    index = {v: k for k, v in enumerate(verts)}
    out = []
    for k, v in enumerate(verts):
        ones = [i for i, x in enumerate(v) if x]
        zeros = [i for i, x in enumerate(v) if not x]
        for a in ones:
            for b in zeros:
                w = list(v)
                w[a], w[b] = 0, 1
                other = index.get(tuple(w))
                if other is not None and other > k:
                    out.append((k, other))
    return sorted(out)


def edge_count_by_area(region: Region) -> int:
    """Edge count of a generalized Catalan region as a total of areas below its paths."""
    if region.lower.word != "E" * region.m + "N" * region.r:
        raise NotGeneralizedCatalan("lower path must be all E steps then all N steps")
    return sum(area_below(path) for path in enumerate_paths(region))


def catalan_edge_formula(n: int) -> int:
    """Closed form for the edge count of the n-th Catalan-staircase polytope.

    Total area below the paths from (0,0) to (n,n) weakly below the diagonal:
    half of n squared per path, minus the total path/diagonal gap.
    """
    if n < 1:
        raise ValueError("n must be positive")
    doubled = n * n * catalan_number(n) - 2 * catalan_area(n)
    if doubled.denominator != 1 or doubled.numerator % 2:
        raise AssertionError(f"edge formula not an integer at n={n}")
    return doubled.numerator // 2


def h_representation(region: Region) -> HRepresentation:
    """Prefix-sum window per position, box bounds, and the fixed coordinate sum."""
    n = region.size
    p = region.lower.profile
    q = region.upper.profile
    eq = LinearConstraint((1,) * n, "=", region.r)
    ineqs: list[LinearConstraint] = []
    for i in range(1, n + 1):
        prefix = (1,) * i + (0,) * (n - i)
        ineqs.append(LinearConstraint(prefix, ">=", p[i]))
        ineqs.append(LinearConstraint(prefix, "<=", q[i]))
    for j in range(n):
        unit = tuple(1 if t == j else 0 for t in range(n))
        ineqs.append(LinearConstraint(unit, ">=", 0))
        ineqs.append(LinearConstraint(unit, "<=", 1))
    return HRepresentation((eq,), tuple(ineqs))


def _prefix_constraint(n: int, i: int, rel: str, rhs: int) -> LinearConstraint:
    return LinearConstraint((1,) * i + (0,) * (n - i), rel, rhs)


def _box_constraint(n: int, j: int, rel: str) -> LinearConstraint:
    unit = tuple(1 if t == j - 1 else 0 for t in range(n))
    return LinearConstraint(unit, rel, 1 if rel == "<=" else 0)


def upper_corner_positions(region: Region) -> list[int]:
    """Interior positions where the upper path finishes an E run."""
    return RunLengthForm.of(region.upper).run_ends("E")


def lower_corner_positions(region: Region) -> list[int]:
    """Interior positions where the lower path finishes an N run."""
    return RunLengthForm.of(region.lower).run_ends("N")


def _candidate_key(region: Region, kind: str, position: int) -> tuple:
    if kind == "x_lower":
        return (PREFER_BOX_LOWER, 0, position)
    if kind == "x_upper":
        return (PREFER_BOX_UPPER, 0, position)
    if kind == "prefix_upper":
        corner = position in upper_corner_positions(region)
        return (PREFER_PREFIX_UPPER, 0 if corner else 1, position)
    corner = position in lower_corner_positions(region)
    return (PREFER_PREFIX_LOWER, 0 if corner else 1, position)


def certify_facet_candidates(
    region: Region,
    candidates: list[tuple[str, int, LinearConstraint]],
    verts: list[tuple[int, ...]] | None = None,
) -> list[Facet]:
    """Keep candidates whose tight vertex sets have affine rank dim - 1.

    Candidates cutting the same facet (identical tight sets) collapse to the
    canonical representative: box bounds first, then corner prefix bounds.
    """
    if verts is None:
        verts = vertices(region)
    dim = dimension(region)
    if dim <= 0:
        return []
    nverts = len(verts)
    groups: dict[tuple[int, ...], list[tuple[str, int, LinearConstraint]]] = {}
    for kind, position, cons in candidates:
        tight = tuple(k for k, v in enumerate(verts) if cons.tight(v))
        if not tight or len(tight) == nverts:
            continue
        groups.setdefault(tight, []).append((kind, position, cons))
    out = []
    for tight, members in groups.items():
        pts = [verts[k] for k in tight]
        if affine_rank(pts, cap=dim - 1) != dim - 1:
            continue
        kind, position, cons = min(
            members, key=lambda m: _candidate_key(region, m[0], m[1])
        )
        out.append(Facet(cons, tight, kind, position))
    out.sort(key=lambda f: _candidate_key(region, f.kind, f.position))
    return out


def facets(region: Region) -> list[Facet]:
    """Minimal facet list of a connected region.

    Candidates are the box bounds plus the prefix bounds at the corner
    positions of the two bounding paths; certification prunes the rest.
    """
    if not is_connected(region):
        raise DisconnectedRegion("facets are computed per connected block")
    n = region.size
    q = region.upper.profile
    p = region.lower.profile
    candidates: list[tuple[str, int, LinearConstraint]] = []
    for j in range(1, n + 1):
        candidates.append(("x_lower", j, _box_constraint(n, j, ">=")))
        candidates.append(("x_upper", j, _box_constraint(n, j, "<=")))
    for i in upper_corner_positions(region):
        candidates.append(("prefix_upper", i, _prefix_constraint(n, i, "<=", q[i])))
    for i in lower_corner_positions(region):
        candidates.append(("prefix_lower", i, _prefix_constraint(n, i, ">=", p[i])))
    return certify_facet_candidates(region, candidates)


def catalan_facet_count(n: int) -> int:
    """Claimed facet count of the Catalan staircase polytope on 2n elements."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 5 * n - 5


def kcatalan_facet_count(width: int, n: int) -> int:
    """Claimed facet count for the width-step staircase; verified against the oracle."""
    if width < 1 or n < 2:
        raise ValueError("need width >= 1 and n >= 2")
    return (width + 1) * (2 * n - 3) + n - 2


def _pinch_regions(region: Region, i: int, v: int) -> tuple[Region, Region]:
    """Split the region through the lattice point reached after i steps at height v."""
    p = region.lower.profile
    q = region.upper.profile
    n = region.size
    left_low = tuple(max(p[j], v - (i - j)) for j in range(i + 1))
    left_high = tuple(min(q[j], v) for j in range(i + 1))
    right_low = tuple(max(p[i + j] - v, 0) for j in range(n - i + 1))
    right_high = tuple(min(q[i + j] - v, j) for j in range(n - i + 1))
    left = Region(path_from_profile(left_low), path_from_profile(left_high))
    right = Region(path_from_profile(right_low), path_from_profile(right_high))
    return left, right


def face_region(region: Region, facet: Facet):
    """Recover the face cut by a facet as one region or a pinched pair.

    Box facets delete the fixed element; prefix facets pinch both paths
    through the shared lattice point, producing a direct sum.
    """
    if facet not in facets(region):
        raise NotAFacet(f"{facet.kind} at {facet.position} is not a facet here")
    if facet.kind == "x_upper":
        return delete(region, facet.position, 1)
    if facet.kind == "x_lower":
        return delete(region, facet.position, 0)
    i = facet.position
    v = facet.constraint.rhs
    return _pinch_regions(region, i, v)
