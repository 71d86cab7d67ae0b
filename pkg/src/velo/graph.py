"""Displacement graphs: parsing, structure, gauge moves, and unrolled windows.

A displacement graph is a finite directed multigraph whose edges carry
integer displacement vectors of a fixed dimension.  Unrolling it over the
integer lattice yields an infinite periodic graph; a finite window of that
unrolling supports exact shortest-path measurements.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import BudgetError, DgfError, NotStronglyConnectedError, UnreachableError

IntVec = tuple[int, ...]

DEFAULT_PATCH_BUDGET = 5_000_000


def inf_norm(vec: Sequence[int]) -> int:
    """Max absolute entry; 0 for the empty vector."""
    return max((abs(c) for c in vec), default=0)


class Edge(NamedTuple):
    source: int
    target: int
    displacement: IntVec


@dataclass(frozen=True)
class DisplacementGraph:
    """Finite directed multigraph with an integer displacement per edge.

    Vertices are addressed by index; names are kept for I/O.  Parallel edges
    and self-loops are permitted and stay distinct (an edge's identity is its
    index in ``edges``).  Instances are immutable and safe to share.
    """

    dim: int
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if not self.vertices:
            raise ValueError("graph must declare at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        n = len(self.vertices)
        for i, e in enumerate(self.edges):
            if not (0 <= e.source < n and 0 <= e.target < n):
                raise ValueError(f"edge {i} references an invalid vertex index")
            if len(e.displacement) != self.dim:
                raise ValueError(
                    f"edge {i} displacement has {len(e.displacement)} entries, expected {self.dim}"
                )

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.vertices]
        for eid, e in enumerate(self.edges):
            out[e.source].append(eid)
        return tuple(tuple(lst) for lst in out)

    def out_edges(self, v: int) -> tuple[int, ...]:
        """Edge ids leaving vertex ``v``, in ascending id order."""
        return self._out[v]

    @cached_property
    def max_displacement_norm(self) -> int:
        """Largest infinity norm of any edge displacement (0 for an edgeless graph)."""
        return max((inf_norm(e.displacement) for e in self.edges), default=0)

    def vertex_index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise ValueError(f"unknown vertex {name!r}") from None


def _is_vertex_name(token: str) -> bool:
    return token.isascii() and token.isidentifier()


def parse_dgf(text: str | bytes) -> DisplacementGraph:
    """Parse the line-oriented DGF format.

    Grammar, one declaration per line, ``#`` starts a comment::

        dim D
        vertex NAME
        edge SRC DST x1 ... xD

    The ``dim`` line must come first; vertices must be declared before use.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    dim: int | None = None
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0]
        if keyword == "dim":
            if dim is not None:
                raise DgfError("duplicate dim declaration", lineno)
            if len(parts) != 2:
                raise DgfError("expected exactly one value after 'dim'", lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise DgfError(f"invalid dimension {parts[1]!r}", lineno) from None
            if dim < 1:
                raise DgfError("dimension must be >= 1", lineno)
        elif keyword == "vertex":
            if dim is None:
                raise DgfError("'vertex' before 'dim'", lineno)
            if len(parts) != 2:
                raise DgfError("expected exactly one name after 'vertex'", lineno)
            name = parts[1]
            if not _is_vertex_name(name):
                raise DgfError(f"invalid vertex name {name!r}", lineno)
            if name in index:
                raise DgfError(f"duplicate vertex name {name!r}", lineno)
            index[name] = len(names)
            names.append(name)
        elif keyword == "edge":
            if dim is None:
                raise DgfError("'edge' before 'dim'", lineno)
            if len(parts) != 3 + dim:
                raise DgfError(
                    f"expected 'edge SRC DST' followed by {dim} displacement entries", lineno
                )
            for endpoint in parts[1:3]:
                if endpoint not in index:
                    raise DgfError(f"undeclared vertex {endpoint!r}", lineno)
            try:
                disp = tuple(int(tok) for tok in parts[3:])
            except ValueError:
                raise DgfError("displacement entries must be integers", lineno) from None
            edges.append(Edge(index[parts[1]], index[parts[2]], disp))
        else:
            raise DgfError(f"unknown directive {keyword!r}", lineno)
    if dim is None:
        raise DgfError("missing dim declaration")
    if not names:
        raise DgfError("graph declares no vertices")
    return DisplacementGraph(dim, tuple(names), tuple(edges))


def serialize_dgf(g: DisplacementGraph) -> str:
    """Canonical DGF text: the dim line, vertices, then edges, in declaration order."""
    lines = [f"dim {g.dim}"]
    lines.extend(f"vertex {name}" for name in g.vertices)
    for e in g.edges:
        coords = " ".join(str(c) for c in e.displacement)
        lines.append(f"edge {g.vertices[e.source]} {g.vertices[e.target]} {coords}")
    return "\n".join(lines) + "\n"


def _tarjan(vertices: Sequence[int], successors: Callable[[int], Iterable[int]]) -> list[list[int]]:
    """Iterative Tarjan; returns SCCs as lists of vertex ids (unspecified order)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work: list[tuple[int, list[int], int]] = [(root, list(successors(root)), 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, succ, pos = work[-1]
            pushed = False
            while pos < len(succ):
                w = succ[pos]
                pos += 1
                if w not in index:
                    work[-1] = (v, succ, pos)
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, list(successors(w)), 0))
                    pushed = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def strongly_connected_components(g: DisplacementGraph) -> tuple[tuple[int, ...], ...]:
    """SCCs of the quotient graph as sorted vertex-index tuples, ordered by smallest member."""
    succ = [sorted({g.edges[eid].target for eid in g.out_edges(v)}) for v in range(len(g.vertices))]
    comps = _tarjan(range(len(g.vertices)), lambda v: succ[v])
    return tuple(sorted((tuple(sorted(c)) for c in comps), key=lambda c: c[0]))


def gauge_transform(
    g: DisplacementGraph,
    gauge: Sequence[Sequence[int]] | Mapping[int, Sequence[int]],
) -> DisplacementGraph:
    """Rewrite every displacement as d(e) + gauge(source) - gauge(target).

    The gauge must assign an integer vector of length ``g.dim`` to every
    vertex index; closed-walk displacements are unchanged by construction.
    """
    vecs: list[IntVec] = []
    for v in range(len(g.vertices)):
        try:
            vec = gauge[v]
        except (KeyError, IndexError):
            raise ValueError(f"gauge is missing vertex {g.vertices[v]!r}") from None
        vec = tuple(int(c) for c in vec)
        if len(vec) != g.dim:
            raise ValueError(f"gauge vector for {g.vertices[v]!r} has wrong dimension")
        vecs.append(vec)
    new_edges = tuple(
        Edge(
            e.source,
            e.target,
            tuple(d + gs - gt for d, gs, gt in zip(e.displacement, vecs[e.source], vecs[e.target])),
        )
        for e in g.edges
    )
    return DisplacementGraph(g.dim, g.vertices, new_edges)


@dataclass(frozen=True)
class UnrolledPatch:
    """Finite window of the periodic unrolling of a displacement graph.

    Contains every node (v, x) with max-norm of x at most ``radius``; edges
    whose translated target falls outside the window are omitted.  Nodes are
    addressed by a dense integer id so that the patch never materialises
    adjacency lists.
    """

    graph: DisplacementGraph
    radius: int

    @property
    def window(self) -> int:
        return 2 * self.radius + 1

    @property
    def vertex_count(self) -> int:
        return len(self.graph.vertices) * self.window ** self.graph.dim

    def contains(self, node: tuple[int, Sequence[int]]) -> bool:
        v, coords = node
        if not (0 <= v < len(self.graph.vertices)):
            return False
        if len(coords) != self.graph.dim:
            return False
        return all(-self.radius <= c <= self.radius for c in coords)

    def node_id(self, node: tuple[int, Sequence[int]]) -> int:
        if not self.contains(node):
            raise ValueError(f"node {node!r} is outside the patch")
        v, coords = node
        nid = v
        for c in coords:
            nid = nid * self.window + (c + self.radius)
        return nid

    def node_at(self, nid: int) -> tuple[int, IntVec]:
        coords = []
        for _ in range(self.graph.dim):
            nid, rem = divmod(nid, self.window)
            coords.append(rem - self.radius)
        coords.reverse()
        return nid, tuple(coords)

    def neighbors(self, nid: int) -> Iterator[int]:
        """Ids of in-window out-neighbors, in edge-id order."""
        v, coords = self.node_at(nid)
        r, w = self.radius, self.window
        for eid in self.graph.out_edges(v):
            e = self.graph.edges[eid]
            ok = True
            tid = e.target
            for c, d in zip(coords, e.displacement):
                t = c + d
                if t < -r or t > r:
                    ok = False
                    break
                tid = tid * w + (t + r)
            if ok:
                yield tid

    def nodes(self) -> Iterator[tuple[int, IntVec]]:
        for nid in range(self.vertex_count):
            yield self.node_at(nid)

    def dump(self) -> str:
        """Debug listing, one line per node: ``NAME x1 ... xd``."""
        lines = []
        for v, coords in self.nodes():
            lines.append(self.graph.vertices[v] + " " + " ".join(str(c) for c in coords))
        return "\n".join(lines) + "\n"


def unroll(
    g: DisplacementGraph, radius: int, *, budget: int = DEFAULT_PATCH_BUDGET
) -> UnrolledPatch:
    """Window of the periodic graph holding all nodes within the given max-norm radius."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    size = len(g.vertices) * (2 * radius + 1) ** g.dim
    if size > budget:
        raise BudgetError(f"patch would contain {size} nodes, exceeding the budget of {budget}")
    return UnrolledPatch(g, radius)


def bfs_distance(
    patch: UnrolledPatch,
    source: tuple[int, Sequence[int]],
    target: tuple[int, Sequence[int]],
) -> int | None:
    """Directed shortest-path edge count inside the patch; None when unreachable.

    Unreachable within a window is an upper-bound artifact: the full periodic
    graph may still connect the two nodes outside the window.
    """
    for endpoint in (source, target):
        if not patch.contains(endpoint):
            raise ValueError(f"endpoint {endpoint!r} is outside the patch")
    src = patch.node_id(source)
    dst = patch.node_id(target)
    if src == dst:
        return 0
    dist = [-1] * patch.vertex_count
    dist[src] = 0
    queue: deque[int] = deque([src])
    while queue:
        nid = queue.popleft()
        d = dist[nid]
        for nb in patch.neighbors(nid):
            if dist[nb] == -1:
                if nb == dst:
                    return d + 1
                dist[nb] = d + 1
                queue.append(nb)
    return None


def gamma_norm_oracle(
    g: DisplacementGraph,
    x: Sequence[int],
    n: int,
    radius: int | None = None,
    *,
    patch_budget: int = DEFAULT_PATCH_BUDGET,
) -> Fraction:
    """Finite-n growth-norm sample d(v, v + n*x)/n measured by BFS on a window.

    The base is vertex 0 at the origin.  The default radius n*(|x| + C + 1),
    with C the largest edge-displacement norm, is a generous window chosen so
    that some shortest path stays inside on well-connected graphs.  As n grows
    this quotient converges to the graph's growth norm of x; finite-n values
    depend on the base vertex, so callers should only rely on limits/bounds.
    """
    x = tuple(int(c) for c in x)
    if len(x) != g.dim:
        raise ValueError(f"direction has {len(x)} entries, expected {g.dim}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(strongly_connected_components(g)) != 1:
        raise NotStronglyConnectedError("growth-norm oracle requires a strongly connected quotient")
    if radius is None:
        radius = max(1, n * (inf_norm(x) + g.max_displacement_norm + 1))
    patch = unroll(g, radius, budget=patch_budget)
    origin = (0, (0,) * g.dim)
    goal = (0, tuple(n * c for c in x))
    if not patch.contains(goal):
        raise UnreachableError(
            f"target {goal!r} lies outside the window of radius {radius}; increase the radius"
        )
    dist = bfs_distance(patch, origin, goal)
    if dist is None:
        raise UnreachableError(
            "target unreachable within the window: the radius is too small "
            "or the periodic graph is disconnected"
        )
    return Fraction(dist, n)
