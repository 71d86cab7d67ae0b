"""Graph-level invariants: velocity polytopes and the connectivity verdict."""
from __future__ import annotations

from dataclasses import dataclass

from .cycles import DEFAULT_MAX_CYCLES, basic_velocities, enumerate_cycles, path_displacement
from .errors import NotStronglyConnectedError
from .geometry import DEFAULT_FACET_BUDGET, Polytope, convex_hull, origin_in_hull_interior
from .graph import DisplacementGraph, Edge, strongly_connected_components
from .intlattice import lattice_rank_and_index

VERDICT_STRONG = "StronglyConnectedPeriodic"
VERDICT_QUOTIENT = "QuotientConnectedOnly"
VERDICT_DISCONNECTED = "Disconnected"


@dataclass(frozen=True)
class ConnectivityReport:
    """Structural connectivity summary of a displacement graph.

    The headline verdict distinguishes a quotient that is not even strongly
    connected (Disconnected), one whose periodic unrolling still splits into
    several components (QuotientConnectedOnly), and the fully connected case.
    The unrolling is strongly connected exactly when the quotient is, the
    cycle displacements generate all of Z^d (rank d, index 1), and the origin
    is interior to their hull so that the generated monoid is a group.
    """

    scc_count: int
    scc_membership: tuple[int, ...]
    cycle_lattice_rank: int
    lattice_index: int | None
    cone_full: bool
    verdict: str


def connectivity_report(
    g: DisplacementGraph, *, max_cycles: int = DEFAULT_MAX_CYCLES
) -> ConnectivityReport:
    sccs = strongly_connected_components(g)
    membership = [0] * len(g.vertices)
    for comp_id, comp in enumerate(sccs):
        for v in comp:
            membership[v] = comp_id
    displacements = sorted({path_displacement(g, c.edges) for c in enumerate_cycles(g, max_cycles)})
    rank, index = lattice_rank_and_index(displacements, g.dim)
    cone_full = bool(displacements) and origin_in_hull_interior(displacements, g.dim)
    if len(sccs) > 1:
        verdict = VERDICT_DISCONNECTED
    elif rank == g.dim and index == 1 and cone_full:
        verdict = VERDICT_STRONG
    else:
        verdict = VERDICT_QUOTIENT
    return ConnectivityReport(
        scc_count=len(sccs),
        scc_membership=tuple(membership),
        cycle_lattice_rank=rank,
        lattice_index=index,
        cone_full=cone_full,
        verdict=verdict,
    )


def velocity_polytope(
    g: DisplacementGraph,
    *,
    max_cycles: int = DEFAULT_MAX_CYCLES,
    facet_budget: int = DEFAULT_FACET_BUDGET,
) -> Polytope:
    """Convex hull of the basic velocities of a strongly connected quotient.

    A graph without cycles yields the empty polytope: no infinite trajectory
    exists at all, so there is no velocity to speak of.
    """
    sccs = strongly_connected_components(g)
    if len(sccs) > 1:
        raise NotStronglyConnectedError(
            f"quotient graph has {len(sccs)} strongly connected components; use velocity_set"
        )
    vels = basic_velocities(g, max_cycles)
    return convex_hull(vels, dim=g.dim, facet_budget=facet_budget)


@dataclass(frozen=True)
class VelocitySet:
    """Velocity polytopes per strongly connected component; their union is the full set."""

    dim: int
    components: tuple[tuple[int, Polytope], ...]


def _induced_subgraph(g: DisplacementGraph, comp: tuple[int, ...]) -> DisplacementGraph:
    remap = {v: i for i, v in enumerate(comp)}
    vertices = tuple(g.vertices[v] for v in comp)
    edges = tuple(
        Edge(remap[e.source], remap[e.target], e.displacement)
        for e in g.edges
        if e.source in remap and e.target in remap
    )
    return DisplacementGraph(g.dim, vertices, edges)


def velocity_set(
    g: DisplacementGraph,
    *,
    max_cycles: int = DEFAULT_MAX_CYCLES,
    facet_budget: int = DEFAULT_FACET_BUDGET,
) -> VelocitySet:
    """Per-component velocity polytopes; components without cycles are omitted."""
    components: list[tuple[int, Polytope]] = []
    for comp_id, comp in enumerate(strongly_connected_components(g)):
        sub = _induced_subgraph(g, comp)
        vels = basic_velocities(sub, max_cycles)
        if vels:
            components.append((comp_id, convex_hull(vels, dim=g.dim, facet_budget=facet_budget)))
    return VelocitySet(g.dim, tuple(components))
