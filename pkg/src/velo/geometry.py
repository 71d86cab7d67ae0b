"""Exact rational polyhedral computation.

Polytopes live in V-representation (extreme points only, lexicographically
sorted) with an optional facet representation for full-dimensional cases.
Everything is computed over fractions.Fraction; there is no floating point
anywhere in this module.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .linprog import solve_lp, solve_standard_lp

QVec = tuple[Fraction, ...]

DEFAULT_FACET_BUDGET = 10_000
MAX_FACET_DIM = 6

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_qvec(vec: Sequence, dim: int | None = None) -> QVec:
    out = tuple(Fraction(c) for c in vec)
    if dim is not None and len(out) != dim:
        raise ValueError(f"vector has {len(out)} entries, expected {dim}")
    return out


class Facet(NamedTuple):
    """Inequality normal.x <= offset with coprime integer coefficients."""

    normal: tuple[int, ...]
    offset: int


class Anisotropy(NamedTuple):
    inradius_sq: Fraction
    circumradius_sq: Fraction
    isotropic: bool


@dataclass(frozen=True)
class Polytope:
    """Rational polytope: sorted extreme points, optional facet inequalities.

    An empty vertex tuple encodes the empty set.  Facets are present only when
    the polytope is full-dimensional and facet enumeration stayed within its
    budget; points then lie in the polytope iff they satisfy every facet.
    """

    dim: int
    vertices: tuple[QVec, ...]
    facets: tuple[Facet, ...] | None = None

    @property
    def is_empty(self) -> bool:
        return not self.vertices


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _gauss_rank(rows: list[list[Fraction]], width: int) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        piv = mat[rank][col]
        mat[rank] = [v / piv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def affine_dimension(points: Sequence[QVec]) -> int:
    """Dimension of the affine hull; -1 for no points, 0 for a single point."""
    if not points:
        return -1
    base = points[0]
    rows = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not rows:
        return 0
    return _gauss_rank(rows, len(base))


def _nullspace_direction(rows: list[list[Fraction]], width: int) -> QVec | None:
    """Nonzero solution of rows.a = 0 when the nullspace is one-dimensional."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        mat[r] = [v / piv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    if r != width - 1:
        return None
    pivot_set = set(pivots)
    free = next(c for c in range(width) if c not in pivot_set)
    a = [_ZERO] * width
    a[free] = _ONE
    for row_i, c in enumerate(pivots):
        a[c] = -mat[row_i][free]
    return tuple(a)


def _matrix_inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    d = len(rows)
    aug = [[Fraction(v) for v in row] + [_ONE if i == j else _ZERO for j in range(d)]
           for i, row in enumerate(rows)]
    for col in range(d):
        pivot = next((i for i in range(col, d) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for i in range(d):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[d:] for row in aug]


def _determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    mat = [[Fraction(v) for v in row] for row in rows]
    d = len(mat)
    det = _ONE
    for col in range(d):
        pivot = next((i for i in range(col, d) if mat[i][col] != 0), None)
        if pivot is None:
            return _ZERO
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        piv = mat[col][col]
        for i in range(col + 1, d):
            if mat[i][col] != 0:
                f = mat[i][col] / piv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return det


# ---------------------------------------------------------------------------
# convex hulls


def _normalize_facet(normal: Sequence[Fraction], offset: Fraction) -> Facet:
    denom_lcm = 1
    for v in list(normal) + [offset]:
        denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in normal]
    b = int(offset * denom_lcm)
    g = 0
    for v in ints + [b]:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
        b //= g
    return Facet(tuple(ints), b)


def _cross(o: QVec, a: QVec, b: QVec) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_ring_2d(points: list[QVec]) -> list[QVec]:
    """Extreme points in counterclockwise order, starting at the lex-least one."""
    pts = sorted(set(points))
    if len(pts) <= 1:
        return pts
    lower: list[QVec] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[QVec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _is_in_hull(point: QVec, others: Sequence[QVec]) -> bool:
    """Exact test: is the point a convex combination of the given points?"""
    if not others:
        return False
    d = len(point)
    rows = [[v[j] for v in others] for j in range(d)]
    rows.append([_ONE] * len(others))
    rhs = list(point) + [_ONE]
    cost = [_ZERO] * len(others)
    return solve_standard_lp(cost, rows, rhs).status == "optimal"


def _facets_full_dim(vertices: list[QVec], dim: int, budget: int) -> tuple[Facet, ...] | None:
    if dim == 1:
        lo, hi = vertices[0][0], vertices[-1][0]
        return tuple(sorted([_normalize_facet((_ONE,), hi), _normalize_facet((-_ONE,), -lo)]))
    if dim == 2:
        ring = _hull_ring_2d(vertices)
        facets = set()
        for i, v1 in enumerate(ring):
            v2 = ring[(i + 1) % len(ring)]
            normal = (v2[1] - v1[1], -(v2[0] - v1[0]))
            facets.add(_normalize_facet(normal, normal[0] * v1[0] + normal[1] * v1[1]))
        return tuple(sorted(facets))
    if dim > MAX_FACET_DIM or math.comb(len(vertices), dim) > budget:
        return None
    facets = set()
    for subset in combinations(vertices, dim):
        base = subset[0]
        rows = [[a - b for a, b in zip(p, base)] for p in subset[1:]]
        normal = _nullspace_direction(rows, dim)
        if normal is None:
            continue
        offset = sum(n * c for n, c in zip(normal, base))
        above = below = False
        for p in vertices:
            side = sum(n * c for n, c in zip(normal, p))
            if side > offset:
                above = True
            elif side < offset:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            normal = tuple(-n for n in normal)
            offset = -offset
        facets.add(_normalize_facet(normal, offset))
    return tuple(sorted(facets))


def convex_hull(
    points: Iterable[Sequence],
    *,
    dim: int | None = None,
    facet_budget: int = DEFAULT_FACET_BUDGET,
) -> Polytope:
    """Exact convex hull: deduplicated extreme points plus facets when cheap.

    ``dim`` is required for an empty input and validated otherwise.  Facets
    are produced for full-dimensional polytopes up to dimension 6, provided
    the candidate-subset count stays within ``facet_budget``; otherwise the
    V-representation is returned alone.
    """
    qpoints = [as_qvec(p) for p in points]
    if qpoints:
        inferred = len(qpoints[0])
        if any(len(p) != inferred for p in qpoints):
            raise ValueError("all points must share one dimension")
        if dim is not None and dim != inferred:
            raise ValueError(f"points have dimension {inferred}, expected {dim}")
        dim = inferred
    elif dim is None:
        raise ValueError("dim is required for an empty point set")
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if not qpoints:
        return Polytope(dim, ())
    unique = sorted(set(qpoints))
    if len(unique) == 1:
        return Polytope(dim, (unique[0],))
    if dim == 1:
        vertices = sorted({unique[0], unique[-1]})
    elif dim == 2:
        vertices = sorted(_hull_ring_2d(unique))
    else:
        vertices = [
            p for i, p in enumerate(unique)
            if not _is_in_hull(p, unique[:i] + unique[i + 1:])
        ]
    facets = None
    if affine_dimension(vertices) == dim:
        facets = _facets_full_dim(vertices, dim, facet_budget)
    return Polytope(dim, tuple(vertices), facets)


def hull_ring_2d(p: Polytope) -> tuple[QVec, ...]:
    """Vertices of a 2-d polytope in counterclockwise boundary order."""
    if p.dim != 2:
        raise ValueError("boundary rings are only defined for 2-d polytopes")
    return tuple(_hull_ring_2d(list(p.vertices)))


# ---------------------------------------------------------------------------
# membership, gauge, distance


def contains_point(p: Polytope, x: Sequence) -> bool:
    """Exact membership of x in the polytope, by LP feasibility over the vertices."""
    if p.is_empty:
        raise ValueError("membership in the empty polytope is undefined")
    return _is_in_hull(as_qvec(x, p.dim), p.vertices)


def satisfies_facets(p: Polytope, x: Sequence) -> bool | None:
    """Facet-side membership check; None when no facet representation exists."""
    if p.facets is None:
        return None
    q = as_qvec(x, p.dim)
    return all(sum(n * c for n, c in zip(f.normal, q)) <= f.offset for f in p.facets)


def gauge_norm(p: Polytope, x: Sequence) -> Fraction | None:
    """Minkowski gauge min{t >= 0 : x in t*P} over the V-representation.

    Computed as the exact LP min sum(lam) with sum(lam_i * v_i) = x, lam >= 0;
    returns None when x lies outside the cone spanned by P (gauge infinite).
    """
    if p.is_empty:
        raise ValueError("gauge of the empty polytope is undefined")
    q = as_qvec(x, p.dim)
    m = len(p.vertices)
    rows = [[v[j] for v in p.vertices] for j in range(p.dim)]
    rhs = list(q)
    sol = solve_standard_lp([_ONE] * m, rows, rhs)
    if sol.status == "infeasible":
        return None
    return sol.value


def polytope_distance_inf(p: Polytope, x: Sequence) -> Fraction:
    """Exact max-norm distance from x to the polytope, via LP."""
    if p.is_empty:
        raise ValueError("distance to the empty polytope is undefined")
    q = as_qvec(x, p.dim)
    m = len(p.vertices)
    d = p.dim
    # variables: lam (m), t, s1 (d), s2 (d)
    nvars = m + 1 + 2 * d
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for j in range(d):
        row = [v[j] for v in p.vertices] + [_ZERO] * (1 + 2 * d)
        row[m] = _ONE
        row[m + 1 + j] = -_ONE
        rows.append(row)
        rhs.append(q[j])
    for j in range(d):
        row = [v[j] for v in p.vertices] + [_ZERO] * (1 + 2 * d)
        row[m] = -_ONE
        row[m + 1 + d + j] = _ONE
        rows.append(row)
        rhs.append(q[j])
    rows.append([_ONE] * m + [_ZERO] * (1 + 2 * d))
    rhs.append(_ONE)
    cost = [_ZERO] * nvars
    cost[m] = _ONE
    sol = solve_standard_lp(cost, rows, rhs)
    if sol.status != "optimal":
        raise AssertionError("distance LP must be feasible and bounded")
    return sol.value


def contains_polytope(outer: Polytope, inner: Polytope) -> bool:
    """True iff every vertex of inner lies in outer (hence inner is a subset)."""
    if outer.dim != inner.dim:
        raise ValueError("polytopes must share one dimension")
    if inner.is_empty:
        return True
    if outer.is_empty:
        return False
    return all(_is_in_hull(v, outer.vertices) for v in inner.vertices)


def is_symmetric(p: Polytope) -> bool:
    """True iff the vertex set equals its negation exactly."""
    vs = set(p.vertices)
    return vs == {tuple(-c for c in v) for v in vs}


def origin_in_hull_interior(points: Sequence[Sequence], dim: int) -> bool:
    """Is the origin an interior point of the convex hull of the points?

    Exact criterion: the only functional a in [-1,1]^dim with a.s <= 0 for all
    points s is a = 0.  Each coordinate direction is probed by two LPs; any
    nonzero optimum certifies a supporting or separating hyperplane.
    """
    pts = [as_qvec(p, dim) for p in points]
    if not pts:
        return False
    nvars = 2 * dim  # a = pos - neg, both halves >= 0
    ub_rows: list[list[Fraction]] = []
    ub_rhs: list[Fraction] = []
    for s in pts:
        ub_rows.append([s[j] for j in range(dim)] + [-s[j] for j in range(dim)])
        ub_rhs.append(_ZERO)
    for j in range(nvars):
        row = [_ZERO] * nvars
        row[j] = _ONE
        ub_rows.append(row)
        ub_rhs.append(_ONE)
    for i in range(dim):
        for sense in (1, -1):
            cost = [_ZERO] * nvars
            cost[i] = Fraction(-sense)
            cost[dim + i] = Fraction(sense)
            sol = solve_lp(cost, ub=(ub_rows, ub_rhs))
            if sol.status != "optimal":
                raise AssertionError("interior-test LP is always feasible and bounded")
            if sol.value < 0:
                return False
    return True


def dimensionality(p: Polytope) -> tuple[int, bool]:
    """Affine dimension of the polytope and whether the origin is interior."""
    if p.is_empty:
        raise ValueError("dimensionality of the empty polytope is undefined")
    return affine_dimension(p.vertices), origin_in_hull_interior(p.vertices, p.dim)


# ---------------------------------------------------------------------------
# anisotropy


def _check_metric(metric: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    rows = [[Fraction(v) for v in row] for row in metric]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError(f"metric must be a {dim}x{dim} matrix")
    for i in range(dim):
        for j in range(i + 1, dim):
            if rows[i][j] != rows[j][i]:
                raise ValueError("metric must be symmetric")
    for k in range(1, dim + 1):
        minor = [row[:k] for row in rows[:k]]
        if _determinant(minor) <= 0:
            raise ValueError("metric must be positive definite")
    return rows


def anisotropy(p: Polytope, metric: Sequence[Sequence] | None = None) -> Anisotropy:
    """Squared in/circumradius of a full-dimensional polytope around the origin.

    The circumradius uses the vertex maximizing x'Mx; the inradius uses the
    facet minimizing offset^2 / (a'M^-1 a).  Both are exact rationals, and a
    polytope is reported isotropic only when they coincide - which in
    dimension >= 2 never happens, polytopes not being balls.
    """
    if p.is_empty:
        raise ValueError("anisotropy of the empty polytope is undefined")
    if p.facets is None:
        raise ValueError("anisotropy requires the facet representation")
    if any(f.offset <= 0 for f in p.facets):
        raise ValueError("anisotropy requires the origin in the interior")
    d = p.dim
    m = _check_metric(metric, d) if metric is not None else [
        [_ONE if i == j else _ZERO for j in range(d)] for i in range(d)
    ]
    minv = _matrix_inverse(m)
    circum = max(
        sum(v[i] * m[i][j] * v[j] for i in range(d) for j in range(d)) for v in p.vertices
    )
    inrad = None
    for f in p.facets:
        quad = sum(f.normal[i] * minv[i][j] * f.normal[j] for i in range(d) for j in range(d))
        val = Fraction(f.offset * f.offset) / quad
        if inrad is None or val < inrad:
            inrad = val
    assert inrad is not None
    return Anisotropy(inrad, circum, inrad == circum)


# ---------------------------------------------------------------------------
# serialization


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def polytope_to_dict(p: Polytope) -> dict:
    out: dict = {
        "dim": p.dim,
        "vertices": [[format_rational(c) for c in v] for v in p.vertices],
    }
    if p.facets is not None:
        out["facets"] = [
            {"a": [str(c) for c in f.normal], "b": str(f.offset)} for f in p.facets
        ]
    return out


def polytope_from_dict(data: dict, *, facet_budget: int = DEFAULT_FACET_BUDGET) -> Polytope:
    """Rebuild a polytope from its JSON form; vertices are the authoritative payload.

    Facets are recomputed rather than trusted, so a canonical round trip is
    guaranteed whenever facet enumeration stays within budget.
    """
    try:
        dim = int(data["dim"])
        vertices = [tuple(parse_rational(c) for c in v) for v in data["vertices"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed polytope JSON: {exc}") from None
    return convex_hull(vertices, dim=dim, facet_budget=facet_budget)


def polytope_to_json(p: Polytope) -> str:
    return json.dumps(polytope_to_dict(p), indent=2) + "\n"


def polytope_from_json(text: str, *, facet_budget: int = DEFAULT_FACET_BUDGET) -> Polytope:
    return polytope_from_dict(json.loads(text), facet_budget=facet_budget)
