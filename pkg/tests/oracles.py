"""Independent brute-force oracles used to validate the production algorithms.

Nothing here shares code paths with the library: cycles come from plain DFS,
membership and gauge values come from enumerating small vertex subsets and
solving exact linear systems, never from the simplex solver.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from velo import DisplacementGraph
from velo.cycles import canonical_rotation


def brute_cycles(g: DisplacementGraph) -> list[tuple[int, ...]]:
    """Every simple cycle by exhaustive DFS, canonicalized; for tiny graphs only."""
    out: list[list[int]] = [[] for _ in g.vertices]
    for eid, e in enumerate(g.edges):
        out[e.source].append(eid)
    found: set[tuple[int, ...]] = set()

    def extend(path: list[int], visited: frozenset[int]) -> None:
        last = g.edges[path[-1]]
        start = g.edges[path[0]].source
        if last.target == start:
            found.add(canonical_rotation(tuple(path)))
            return
        if last.target in visited or len(path) >= len(g.vertices):
            return
        for eid in out[last.target]:
            extend(path + [eid], visited | {last.target})

    for eid in range(len(g.edges)):
        extend([eid], frozenset({g.edges[eid].source}))
    return sorted(found)


def solve_exact(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None | str:
    """Gaussian elimination: solution list, None if inconsistent, "under" if not unique."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        aug[r] = [v / piv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    if len(pivots) < n:
        return "under"
    x = [Fraction(0)] * n
    for row_i, c in enumerate(pivots):
        x[c] = aug[row_i][n]
    return x


def member_caratheodory(point: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> bool:
    """Membership in a convex hull by enumerating simplices of at most d+1 points."""
    d = len(point)
    pts = [tuple(Fraction(c) for c in p) for p in points]
    target = list(point) + [Fraction(1)]
    for size in range(1, d + 2):
        for subset in combinations(pts, size):
            rows = [[p[j] for p in subset] for j in range(d)]
            rows.append([Fraction(1)] * size)
            sol = solve_exact(rows, target)
            if isinstance(sol, list) and all(l >= 0 for l in sol):
                return True
    return False


def gauge_caratheodory(
    point: Sequence[Fraction], vertices: Sequence[Sequence[Fraction]]
) -> Fraction | None:
    """Minkowski gauge by enumerating basic solutions over at most d vertices."""
    d = len(point)
    pts = [tuple(Fraction(c) for c in p) for p in vertices]
    target = [Fraction(c) for c in point]
    best: Fraction | None = Fraction(0) if all(c == 0 for c in target) else None
    for size in range(1, d + 1):
        for subset in combinations(pts, size):
            rows = [[p[j] for p in subset] for j in range(d)]
            sol = solve_exact(rows, target)
            if isinstance(sol, list) and all(l >= 0 for l in sol):
                value = sum(sol, Fraction(0))
                if best is None or value < best:
                    best = value
    return best
