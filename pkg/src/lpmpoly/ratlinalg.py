"""Exact linear algebra over the rationals: ranks, determinants, feasibility.

Everything here works on plain Python ints and fractions.Fraction; no
floating point enters any computation.  Matrices are lists of row tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rank_int(rows: Sequence[Sequence[int]], cap: int | None = None) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    When ``cap`` is given, returns early with ``cap + 1`` as soon as the rank
    is known to exceed ``cap``.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    prev_pivot = 1
    col = 0
    while work and col < ncols:
        pivot_row = None
        for idx, row in enumerate(work):
            if row[col]:
                pivot_row = idx
                break
        if pivot_row is None:
            col += 1
            continue
        pivot = work.pop(pivot_row)
        pv = pivot[col]
        rank += 1
        if cap is not None and rank > cap:
            return rank
        reduced = []
        for row in work:
            rv = row[col]
            if rv:
                row = [(pv * a - rv * b) // prev_pivot for a, b in zip(row, pivot)]
            if any(row):
                reduced.append(row)
        work = reduced
        prev_pivot = pv
        col += 1
    return rank


def affine_rank(points: Sequence[Sequence[int]], cap: int | None = None) -> int:
    """Dimension of the affine hull: -1 for no points, 0 for a single point."""
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank_int(diffs, cap=cap)


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    work = [list(r) for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return 0
        pv = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (pv * work[i][j] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = pv
    return sign * work[n - 1][n - 1]


def barycentric_coordinates(
    vertices: Sequence[Sequence[int]], point: Sequence[Fraction]
) -> list[Fraction] | None:
    """Coefficients expressing ``point`` affinely over ``vertices``; None if not in the hull's span."""
    k = len(vertices)
    dim = len(point)
    # Solve [V^T; 1^T] lam = [point; 1] in the least-dimension sense: the
    # vertices of a simplex are affinely independent, so the square system
    # over a maximal independent subset suffices; here callers pass simplex
    # vertex lists (k = dim + 1 or fewer).
    rows = [[Fraction(vertices[j][i]) for j in range(k)] for i in range(dim)]
    rows.append([Fraction(1)] * k)
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    # Overdetermined when k < dim + 1: reduce to a square subsystem and check the rest.
    aug = [row + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    row_i = 0
    for col in range(k):
        pivot = next((i for i in range(row_i, len(aug)) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[row_i], aug[pivot] = aug[pivot], aug[row_i]
        pv = aug[row_i][col]
        aug[row_i] = [x / pv for x in aug[row_i]]
        for i in range(len(aug)):
            if i != row_i and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row_i])]
        pivots.append(col)
        row_i += 1
    for i in range(row_i, len(aug)):
        if aug[i][k]:
            return None
    lam = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        lam[col] = aug[i][k]
    return lam


def _phase_one_feasible(columns: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Exact phase-1 simplex: does ``A lam = rhs`` admit ``lam >= 0``?

    ``columns`` holds the columns of A.  Artificial variables seed the basis;
    feasible iff their sum can be driven to zero.  Dantzig pricing with a
    Bland fallback guards against cycling.
    """
    nrows = len(rhs)
    ncols = len(columns)
    tableau = []
    for i in range(nrows):
        row = [col[i] for col in columns]
        b = rhs[i]
        if b < 0:
            row = [-x for x in row]
            b = -b
        row.append(b)
        tableau.append(row)
    basis = list(range(ncols, ncols + nrows))  # artificials
    # cost row: minimize sum of artificials => reduced costs of real columns
    cost = [Fraction(0)] * (ncols + 1)
    for i in range(nrows):
        for j in range(ncols):
            cost[j] -= tableau[i][j]
        cost[ncols] -= tableau[i][ncols]
    iterations = 0
    bland_after = 40 * (nrows + ncols)
    while True:
        entering = None
        if iterations < bland_after:
            best = Fraction(0)
            for j in range(ncols):
                if cost[j] < best:
                    best = cost[j]
                    entering = j
        else:
            for j in range(ncols):
                if cost[j] < 0:
                    entering = j
                    break
        if entering is None:
            return -cost[ncols] == 0
        leaving = None
        best_ratio = None
        for i in range(nrows):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][ncols] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leaving]
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            return -cost[ncols] == 0
        pv = tableau[leaving][entering]
        tableau[leaving] = [x / pv for x in tableau[leaving]]
        for i in range(nrows):
            if i != leaving and tableau[i][entering]:
                f = tableau[i][entering]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leaving])]
        if cost[entering]:
            f = cost[entering]
            cost = [a - f * b for a, b in zip(cost, tableau[leaving])]
        basis[leaving] = entering
        iterations += 1


def in_convex_hull(points: Sequence[Sequence[int]], target: Sequence[Fraction]) -> bool:
    """Exact membership of ``target`` in the convex hull of integer ``points``.

    Fast path: scan for a two-point certificate (target the midpoint-style
    combination of a pair); otherwise settle it with exact phase-1 simplex.
    """
    if not points:
        return False
    target = [Fraction(t) for t in target]
    pts = [tuple(p) for p in points]
    index = set(pts)
    for p in pts:
        mirror = tuple(2 * t - Fraction(x) for t, x in zip(target, p))
        if all(c.denominator == 1 for c in mirror) and tuple(int(c) for c in mirror) in index:
            return True
    dim = len(target)
    columns = [[Fraction(p[i]) for i in range(dim)] + [Fraction(1)] for p in pts]
    rhs = target + [Fraction(1)]
    return _phase_one_feasible(columns, rhs)
