"""Monotone lattice paths and the regions bounded by a pair of them.

A path from (0,0) to (m,r) is a word over {E, N}.  Everything downstream
(matroids, polytopes, volumes) is driven by the height profile of such
words: ``profile[i]`` is the number of N steps among the first ``i``
letters.  A region is a pair of paths with common endpoints, the lower one
never climbing above the upper one.

>>> p = parse_path("EENN")
>>> (p.m, p.r, p.profile[1:])
(2, 2, (0, 0, 1, 2))
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DominanceViolation, EmptyWord, EndpointMismatch, InvalidCharacter


class PathWord:
    """An E/N word with its height profile precomputed."""

    __slots__ = ("word", "m", "r", "profile")

    def __init__(self, word: str):
        if not word:
            raise EmptyWord("path word is empty")
        heights = [0]
        h = 0
        for pos, step in enumerate(word, start=1):
            if step == "N":
                h += 1
            elif step != "E":
                raise InvalidCharacter(word, pos)
            heights.append(h)
        self.word = word
        self.r = h
        self.m = len(word) - h
        self.profile = tuple(heights)

    def __len__(self) -> int:
        return self.m + self.r

    def __eq__(self, other) -> bool:
        return isinstance(other, PathWord) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"PathWord({self.word!r})"

    def north_positions(self) -> tuple[int, ...]:
        """1-based positions of the N steps."""
        return tuple(i for i, s in enumerate(self.word, start=1) if s == "N")

    def east_step_heights(self) -> tuple[int, ...]:
        """Height at which each E step is taken, left to right."""
        return tuple(self.profile[i - 1] for i, s in enumerate(self.word, start=1) if s == "E")

    def run_lengths(self) -> tuple[tuple[str, int], ...]:
        """Maximal runs as (letter, length) pairs."""
        runs = []
        for step in self.word:
            if runs and runs[-1][0] == step:
                runs[-1][1] += 1
            else:
                runs.append([step, 1])
        return tuple((s, c) for s, c in runs)


def parse_path(word: str) -> PathWord:
    """Parse an E/N word, rejecting empty input and foreign letters.

    >>> parse_path("N").r
    1
    """
    return PathWord(word)


def path_from_profile(profile: tuple[int, ...]) -> PathWord:
    """Rebuild the word whose height profile (including the leading 0) is given."""
    letters = []
    for a, b in zip(profile, profile[1:]):
        if b - a not in (0, 1):
            raise ValueError(f"not a unit-step profile: {profile}")
        letters.append("N" if b == a + 1 else "E")
    return PathWord("".join(letters))


class Box(NamedTuple):
    """Unit box with corners (col-1, row-1) and (col, row), 1-based."""

    col: int
    row: int


class Region:
    """A pair of bounding paths, lower never above upper."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower: PathWord, upper: PathWord):
        if lower.m != upper.m or lower.r != upper.r:
            raise EndpointMismatch(
                f"endpoints differ: ({lower.m},{lower.r}) vs ({upper.m},{upper.r})"
            )
        for i in range(1, len(lower) + 1):
            if lower.profile[i] > upper.profile[i]:
                raise DominanceViolation(i)
        self.lower = lower
        self.upper = upper

    @property
    def m(self) -> int:
        return self.lower.m

    @property
    def r(self) -> int:
        return self.lower.r

    @property
    def size(self) -> int:
        """Ground-set size m + r."""
        return len(self.lower)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Region)
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __hash__(self) -> int:
        return hash((self.lower.word, self.upper.word))

    def __repr__(self) -> str:
        return f"Region({self.lower.word!r}, {self.upper.word!r})"

    def to_json_dict(self) -> dict:
        return {"lower": self.lower.word, "upper": self.upper.word}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Region":
        return cls(parse_path(data["lower"]), parse_path(data["upper"]))


def make_region(lower: PathWord, upper: PathWord) -> Region:
    """Validate dominance pointwise on profiles and wrap the pair."""
    return Region(lower, upper)


def region_from_words(lower: str, upper: str) -> Region:
    return Region(parse_path(lower), parse_path(upper))


def enumerate_paths(region: Region) -> list[PathWord]:
    """All paths between the bounding pair, in lexicographic word order (E < N).

    The count equals the number of bases of the associated matroid.
    """
    p = region.lower.profile
    q = region.upper.profile
    n = region.size
    out: list[PathWord] = []
    letters: list[str] = []

    def extend(i: int, h: int) -> None:
        if i == n:
            out.append(PathWord("".join(letters)))
            return
        if h >= p[i + 1]:  # E keeps the height; upper bound holds automatically
            letters.append("E")
            extend(i + 1, h)
            letters.pop()
        if h + 1 <= q[i + 1]:  # N raises it; lower bound holds automatically
            letters.append("N")
            extend(i + 1, h + 1)
            letters.pop()

    extend(0, 0)
    return out


def intersection_vertices(region: Region) -> list[tuple[int, int]]:
    """Lattice points shared by the two bounding paths, endpoints included."""
    p = region.lower.profile
    q = region.upper.profile
    return [(i - p[i], p[i]) for i in range(region.size + 1) if p[i] == q[i]]


def area_below(path: PathWord) -> int:
    """Unit squares between the path and the all-E-then-all-N path.

    Equals the sum, over E steps, of the height at which the step is taken.

    >>> area_below(parse_path("NENE"))
    3
    """
    return sum(path.east_step_heights())


def region_boxes(region: Region) -> tuple[Box, ...]:
    """All boxes weakly between the paths, sorted by (col, row); empty iff lower = upper."""
    lo = region.lower.east_step_heights()
    hi = region.upper.east_step_heights()
    return tuple(
        Box(col, row)
        for col in range(1, region.m + 1)
        for row in range(lo[col - 1] + 1, hi[col - 1] + 1)
    )


def rectangle_region(m: int, r: int) -> Region:
    """The full m-by-r rectangle: every path with m E and r N steps is allowed."""
    return region_from_words("E" * m + "N" * r, "N" * r + "E" * m)


def hypersimplex_region(k: int, n: int) -> Region:
    """Rectangle whose polytope is the hypersimplex of 0/1 points with k ones in n slots."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    return rectangle_region(n - k, k)


def catalan_region(n: int) -> Region:
    """Staircase region under the diagonal of an n-by-n square, one loop and one coloop."""
    return region_from_words("E" * n + "N" * n, "EN" * n)


def reduced_catalan_region(n: int) -> Region:
    """The connected core of ``catalan_region(n + 1)``, a region on 2n elements."""
    return region_from_words("E" * n + "N" * n, "NE" * n)


def kcatalan_region(width: int, n: int) -> Region:
    """Staircase with steps of width E-steps per N step, on (width+1)(n-1) elements."""
    return region_from_words(
        "E" * (width * (n - 1)) + "N" * (n - 1), ("N" + "E" * width) * (n - 1)
    )
