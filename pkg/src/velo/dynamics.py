"""Finite-horizon trajectory machinery.

A trajectory plan weights a list of cycles and connects consecutive ones by
short quotient paths; scheduling it emits the prefix of the infinite walk
that realizes the weighted mixture of cycle velocities.  The block at stage k
repeats cycle i floor(k * weight_i / length_i) times, and stage k as a whole
is traversed k times, so the mixture error decays like 1/k.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cycles import Cycle, Path, is_cycle, path_displacement
from .errors import BudgetError, NotStronglyConnectedError
from .geometry import Polytope, QVec, polytope_distance_inf
from .graph import DisplacementGraph, strongly_connected_components

DEFAULT_PREFIX_BUDGET = 10_000_000


@dataclass(frozen=True)
class TrajectoryPlan:
    """Weighted cycles plus connector paths from each cycle's base to the next's."""

    cycles: tuple[tuple[Cycle, Fraction], ...]
    connectors: tuple[Path, ...]


def empirical_velocity(g: DisplacementGraph, prefix: Sequence[int]) -> QVec:
    """Average displacement per step over a nonempty walk prefix."""
    n = len(prefix)
    if n < 1:
        raise ValueError("the empty prefix has no velocity")
    disp = path_displacement(g, tuple(prefix))
    return tuple(Fraction(c, n) for c in disp)


def _shortest_quotient_path(g: DisplacementGraph, start: int, goal: int) -> Path:
    """BFS shortest path, expanding edges in ascending id order for determinism."""
    if start == goal:
        return ()
    parent: dict[int, int] = {start: -1}
    queue: deque[int] = deque([start])
    while queue:
        v = queue.popleft()
        for eid in g.out_edges(v):
            w = g.edges[eid].target
            if w not in parent:
                parent[w] = eid
                if w == goal:
                    path: list[int] = []
                    while w != start:
                        eid = parent[w]
                        path.append(eid)
                        w = g.edges[eid].source
                    return tuple(reversed(path))
                queue.append(w)
    raise NotStronglyConnectedError(
        f"no path from {g.vertices[start]!r} to {g.vertices[goal]!r}"
    )


def build_plan(
    g: DisplacementGraph, weighted_cycles: Sequence[tuple[Cycle, Fraction]]
) -> TrajectoryPlan:
    """Attach shortest connectors between consecutive cycles of a weighted list.

    Weights must be positive rationals summing to one; the quotient must be
    strongly connected so connectors (each shorter than |V|) always exist.
    """
    if not weighted_cycles:
        raise ValueError("a plan needs at least one cycle")
    if len(strongly_connected_components(g)) != 1:
        raise NotStronglyConnectedError("trajectory plans require a strongly connected quotient")
    entries: list[tuple[Cycle, Fraction]] = []
    for cycle, weight in weighted_cycles:
        weight = Fraction(weight)
        if weight <= 0:
            raise ValueError("cycle weights must be positive")
        if not is_cycle(g, cycle.edges):
            raise ValueError(f"edge sequence {cycle.edges!r} is not a cycle of the graph")
        entries.append((cycle, weight))
    total = sum(w for _, w in entries)
    if total != 1:
        raise ValueError(f"cycle weights must sum to 1, got {total}")
    connectors: list[Path] = []
    r = len(entries)
    for i in range(r):
        here = entries[i][0]
        nxt = entries[(i + 1) % r][0]
        end = g.edges[here.edges[-1]].target
        start = g.edges[nxt.edges[0]].source
        connectors.append(_shortest_quotient_path(g, end, start))
    return TrajectoryPlan(tuple(entries), tuple(connectors))


def schedule(
    plan: TrajectoryPlan, k_max: int, *, budget: int = DEFAULT_PREFIX_BUDGET
) -> Path:
    """Emit the walk prefix consisting of stages 1..k_max, stage k repeated k times.

    Stage k concatenates, for each planned cycle i in order, that cycle
    floor(k * weight_i / length_i) times followed by connector i.  The result
    composes in the quotient graph because every cycle is closed.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    total = 0
    stage_repeats: list[list[int]] = []
    for k in range(1, k_max + 1):
        repeats = [math.floor(k * weight / cycle.length) for cycle, weight in plan.cycles]
        length = sum(a * cycle.length for a, (cycle, _) in zip(repeats, plan.cycles))
        length += sum(len(p) for p in plan.connectors)
        total += k * length
        if total > budget:
            raise BudgetError(
                f"scheduled prefix would exceed the budget of {budget} edges at stage {k}"
            )
        stage_repeats.append(repeats)
    edges: list[int] = []
    for k, repeats in enumerate(stage_repeats, start=1):
        block: list[int] = []
        for i, ((cycle, _), count) in enumerate(zip(plan.cycles, repeats)):
            block.extend(cycle.edges * count)
            block.extend(plan.connectors[i])
        edges.extend(block * k)
    return tuple(edges)


def convergence_check(g: DisplacementGraph, prefix: Sequence[int], p: Polytope) -> Fraction:
    """Exact max-norm distance of the prefix velocity from the given polytope.

    For the velocity polytope of a strongly connected quotient this is
    bounded by 2 |V| C / n, with C the largest edge-displacement norm.
    """
    if p.dim != g.dim:
        raise ValueError("polytope dimension does not match the graph")
    return polytope_distance_inf(p, empirical_velocity(g, prefix))
