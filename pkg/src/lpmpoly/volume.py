"""Normalized volumes via descent-class counts.

The volume of a connected region's polytope is the total, over its border
strips, of the number of permutations whose descent set matches the strip.
Unimodular-simplex normalization throughout: a unit simplex has volume 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb
from typing import Iterable

from .decompose import BorderStrip, border_strips
from .errors import DisconnectedRegion
from .matroid import is_connected
from .paths import Region


def descent_set(perm: tuple[int, ...]) -> frozenset[int]:
    """Positions i with perm[i-1] > perm[i], 1-based."""
    return frozenset(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])


def inverse_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for pos, val in enumerate(perm, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def exact_descent_count(n: int, descents: Iterable[int]) -> int:
    """Permutations of [n] with descent set exactly the given positions.

    Inclusion-exclusion over subsets of the descent set, each term a
    multinomial counting the permutations with descents confined to it.
    """
    d = sorted(set(descents))
    if any(not 1 <= i <= n - 1 for i in d):
        raise ValueError(f"descent positions must lie in 1..{n - 1}")

    def confined(positions: tuple[int, ...]) -> int:
        total = 1
        prev = 0
        remaining = n
        for cut in positions:
            total *= comb(remaining, cut - prev)
            remaining -= cut - prev
            prev = cut
        return total

    result = 0
    for mask in range(1 << len(d)):
        chosen = tuple(d[i] for i in range(len(d)) if mask >> i & 1)
        sign = -1 if (len(d) - len(chosen)) % 2 else 1
        result += sign * confined(chosen)
    return result


@cache
def eulerian(k: int, n: int) -> int:
    """Permutations of [n] with exactly k-1 descents."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n == 1:
        return 1
    j = k - 1
    up = eulerian(k, n - 1) * (j + 1) if k <= n - 1 else 0
    down = eulerian(k - 1, n - 1) * (n - j) if k >= 2 else 0
    return up + down


@cache
def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _catalan_area_closed(n: int) -> Fraction:
    return Fraction(4**n, 2) - Fraction(comb(2 * n + 2, n + 1), 4)


@cache
def _catalan_area_recurrence(n: int) -> Fraction:
    # gap(n+1) = 2 sum_k gap(k) C(n-k) + sum_k (k + 1/2) C(k) C(n-k),
    # from cutting each path at its first return to the diagonal.
    if n == 0:
        return Fraction(0)
    m = n - 1
    total = Fraction(0)
    for k in range(m + 1):
        ck, cmk = catalan_number(k), catalan_number(m - k)
        total += 2 * _catalan_area_recurrence(k) * cmk
        total += (Fraction(2 * k + 1, 2)) * ck * cmk
    return total


def catalan_area(n: int) -> Fraction:
    """Total gap area between the diagonal and the paths weakly below it, n-by-n grid.

    Computed by the first-return recurrence and by the closed form; the two
    must agree.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    closed = _catalan_area_closed(n)
    recurred = _catalan_area_recurrence(n)
    if closed != recurred:
        raise AssertionError(f"area recurrence and closed form disagree at n={n}")
    return closed


def strip_volume(strip: BorderStrip) -> int:
    """Standard fillings of the strip: ascents along rows, descents up columns."""
    return exact_descent_count(len(strip), strip.descents)


def volume(region: Region) -> int:
    """Normalized volume of a connected region's polytope: total over its strips."""
    if not is_connected(region):
        raise DisconnectedRegion(
            "volume of a direct sum is not a plain total; compute per connected block"
        )
    return sum(strip_volume(s) for s in border_strips(region))
