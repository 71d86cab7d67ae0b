"""Simple cycles of the quotient multigraph and exact path/cycle arithmetic.

Cycles are sequences of edge ids that compose, close, and repeat no vertex,
so their length never exceeds the vertex count.  Two rotations of the same
edge sequence are the same cycle; the canonical representative is the
lexicographically smallest rotation.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetError
from .graph import DisplacementGraph, IntVec, _tarjan

Path = tuple[int, ...]

DEFAULT_MAX_CYCLES = 1_000_000


def _check_path(g: DisplacementGraph, path: Sequence[int]) -> None:
    for eid in path:
        if not (0 <= eid < len(g.edges)):
            raise ValueError(f"edge id {eid} out of range")
    for a, b in zip(path, path[1:]):
        if g.edges[a].target != g.edges[b].source:
            raise ValueError(f"edges {a} and {b} do not compose")


def path_displacement(g: DisplacementGraph, path: Sequence[int]) -> IntVec:
    """Sum of edge displacements along a composing path; zero vector for the empty path."""
    _check_path(g, path)
    total = [0] * g.dim
    for eid in path:
        for i, c in enumerate(g.edges[eid].displacement):
            total[i] += c
    return tuple(total)


def least_rotation(seq: Sequence[int]) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm, O(n))."""
    n = len(seq)
    if n <= 1:
        return 0
    doubled = tuple(seq) + tuple(seq)
    fail = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        sj = doubled[j]
        i = fail[j - best - 1]
        while i != -1 and sj != doubled[best + i + 1]:
            if sj < doubled[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if sj != doubled[best + i + 1]:
            if sj < doubled[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return best % n


def canonical_rotation(edges: Sequence[int]) -> Path:
    """Rotation of the edge sequence that is lexicographically smallest."""
    edges = tuple(edges)
    k = least_rotation(edges)
    return edges[k:] + edges[:k]


@dataclass(frozen=True)
class Cycle:
    """Closed simple cycle, stored as an edge-id sequence."""

    edges: Path

    def __post_init__(self) -> None:
        if not self.edges:
            raise ValueError("a cycle must contain at least one edge")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_canonical(self) -> bool:
        return self.edges == canonical_rotation(self.edges)


def is_cycle(g: DisplacementGraph, edges: Sequence[int]) -> bool:
    """True when the edge sequence composes, closes, and repeats no vertex."""
    if not edges:
        return False
    try:
        _check_path(g, edges)
    except ValueError:
        return False
    if g.edges[edges[-1]].target != g.edges[edges[0]].source:
        return False
    sources = [g.edges[eid].source for eid in edges]
    return len(set(sources)) == len(sources)


def _johnson_from_root(
    adj: Sequence[Sequence[tuple[int, int]]],
    comp: set[int],
    root: int,
    emit,
) -> None:
    """Emit every elementary cycle through ``root`` inside the component.

    ``adj`` maps vertex -> [(edge id, target)] without self-loops; blocking
    works at the vertex level, so parallel edges simply emit separately.
    """
    blocked = {root}
    blocked_after: dict[int, set[int]] = defaultdict(set)
    path_edges: list[int] = []
    vert_stack = [root]
    iters = [iter([(eid, w) for eid, w in adj[root] if w in comp])]
    closed = [False]
    while iters:
        advanced = False
        for eid, w in iters[-1]:
            if w == root:
                emit(path_edges + [eid])
                closed[-1] = True
            elif w not in blocked:
                blocked.add(w)
                vert_stack.append(w)
                path_edges.append(eid)
                iters.append(iter([(e2, w2) for e2, w2 in adj[w] if w2 in comp]))
                closed.append(False)
                advanced = True
                break
        if advanced:
            continue
        iters.pop()
        v = vert_stack.pop()
        if path_edges:
            path_edges.pop()
        if closed.pop():
            if closed:
                closed[-1] = True
            pending = {v}
            while pending:
                u = pending.pop()
                if u in blocked:
                    blocked.discard(u)
                    pending |= blocked_after[u]
                    blocked_after[u].clear()
        else:
            for _eid, w in adj[v]:
                if w in comp:
                    blocked_after[w].add(v)


def enumerate_cycles(
    g: DisplacementGraph, max_cycles: int = DEFAULT_MAX_CYCLES
) -> tuple[Cycle, ...]:
    """All simple cycles, one canonical rotation each, sorted lexicographically.

    Self-loops are length-1 cycles and parallel edges yield distinct cycles.
    Enumeration streams against ``max_cycles``; exceeding it raises BudgetError
    and no partial result is returned.
    """
    found: list[Path] = []

    def emit(edge_seq: list[int] | tuple[int, ...], comp: Sequence[int] | None = None) -> None:
        if len(found) >= max_cycles:
            where = ""
            if comp is not None:
                where = " while exploring component {" + ",".join(
                    g.vertices[v] for v in sorted(comp)
                ) + "}"
            raise BudgetError(f"cycle budget of {max_cycles} exceeded{where}")
        found.append(canonical_rotation(edge_seq))

    for eid, e in enumerate(g.edges):
        if e.source == e.target:
            emit((eid,))

    adj: list[list[tuple[int, int]]] = [
        [(eid, g.edges[eid].target) for eid in g.out_edges(v) if g.edges[eid].target != v]
        for v in range(len(g.vertices))
    ]
    comps = _tarjan(range(len(g.vertices)), lambda v: [w for _, w in adj[v]])
    stack = sorted((tuple(sorted(c)) for c in comps if len(c) >= 2), key=lambda c: c[0])
    while stack:
        comp = stack.pop()
        comp_set = set(comp)
        root = comp[0]
        _johnson_from_root(adj, comp_set, root, lambda seq, c=comp: emit(seq, c))
        remaining = sorted(comp_set - {root})
        if len(remaining) >= 2:
            rem_set = set(remaining)
            subs = _tarjan(remaining, lambda v: [w for _, w in adj[v] if w in rem_set])
            stack.extend(
                sorted((tuple(sorted(c)) for c in subs if len(c) >= 2), key=lambda c: c[0])
            )
    found.sort()
    return tuple(Cycle(p) for p in found)


def basic_velocities(
    g: DisplacementGraph, max_cycles: int = DEFAULT_MAX_CYCLES
) -> tuple[tuple[Fraction, ...], ...]:
    """Deduplicated displacement-per-step vectors of all simple cycles, sorted."""
    vels = set()
    for c in enumerate_cycles(g, max_cycles):
        disp = path_displacement(g, c.edges)
        vels.add(tuple(Fraction(d, c.length) for d in disp))
    return tuple(sorted(vels))


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles excised from a path plus the short remaining path."""

    cycles: tuple[Cycle, ...]
    remainder: Path

    @property
    def total_cycle_length(self) -> int:
        return sum(c.length for c in self.cycles)


def decompose_path(g: DisplacementGraph, path: Sequence[int]) -> CycleDecomposition:
    """Repeatedly excise the earliest-closing cycle until the path is shorter than |V|.

    Each pass scans for the smallest index l whose edge target revisits an
    earlier source; the cycle between the two is removed and the surrounding
    pieces recompose.  Length and displacement are conserved exactly across
    the decomposition.
    """
    _check_path(g, path)
    n_vertices = len(g.vertices)
    remaining = list(path)
    cycles: list[Cycle] = []
    while len(remaining) >= n_vertices:
        first_source: dict[int, int] = {}
        cut: tuple[int, int] | None = None
        for i, eid in enumerate(remaining):
            src = g.edges[eid].source
            if src not in first_source:
                first_source[src] = i
            tgt = g.edges[eid].target
            if tgt in first_source:
                cut = (first_source[tgt], i)
                break
        if cut is None:  # impossible by pigeonhole once len(remaining) >= |V|
            raise AssertionError("no cycle found in a path of length >= |V|")
        k, l = cut
        cycles.append(Cycle(canonical_rotation(remaining[k : l + 1])))
        del remaining[k : l + 1]
    return CycleDecomposition(tuple(cycles), tuple(remaining))
