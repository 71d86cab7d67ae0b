from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from helpers import random_gauge, random_strongly_connected_graph, random_walk
from velo import (
    BudgetError,
    NotStronglyConnectedError,
    build_plan,
    convergence_check,
    empirical_velocity,
    enumerate_cycles,
    gauge_transform,
    parse_dgf,
    path_displacement,
    schedule,
    velocity_polytope,
)
from velo.graph import inf_norm

F = Fraction


def _cycle_velocity(g, cycle):
    disp = path_displacement(g, cycle.edges)
    return tuple(F(c, cycle.length) for c in disp)


# ---------------------------------------------------------------------------
# empirical velocity


def test_empirical_velocity_repeated_cycle(honeycomb):
    # A->B with (0,1) then B->A with (1,0), five times over
    prefix = (1, 5) * 5
    assert empirical_velocity(honeycomb, prefix) == (F(1, 2), F(1, 2))


def test_empirical_velocity_constant_loop():
    g = parse_dgf("dim 1\nvertex A\nedge A A 0")
    assert empirical_velocity(g, (0,) * 7) == (F(0),)


def test_empirical_velocity_definition(honeycomb):
    rng = random.Random(9)
    for _ in range(10):
        prefix = random_walk(honeycomb, rng, rng.randint(1, 40))
        v = empirical_velocity(honeycomb, prefix)
        n = len(prefix)
        assert tuple(c * n for c in v) == path_displacement(honeycomb, prefix)


def test_empirical_velocity_empty_prefix(honeycomb):
    with pytest.raises(ValueError):
        empirical_velocity(honeycomb, ())


# ---------------------------------------------------------------------------
# plans


def test_plan_single_cycle_empty_connector(honeycomb):
    c = enumerate_cycles(honeycomb)[0]
    plan = build_plan(honeycomb, [(c, F(1))])
    assert plan.connectors == ((),)


def test_plan_two_cycles_sharing_start(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    plan = build_plan(honeycomb, [(cycles[0], F(1, 2)), (cycles[4], F(1, 2))])
    assert plan.connectors == ((), ())


def test_plan_keeps_exact_weights(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    plan = build_plan(honeycomb, [(cycles[0], F(1, 3)), (cycles[1], F(2, 3))])
    assert [w for _, w in plan.cycles] == [F(1, 3), F(2, 3)]


def test_plan_validation(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    with pytest.raises(ValueError):
        build_plan(honeycomb, [(cycles[0], F(1, 2))])  # weights do not sum to 1
    with pytest.raises(ValueError):
        build_plan(honeycomb, [(cycles[0], F(0)), (cycles[1], F(1))])  # nonpositive
    with pytest.raises(ValueError):
        build_plan(honeycomb, [])
    broken = parse_dgf("dim 1\nvertex A\nvertex B\nedge A B 0")
    with pytest.raises(NotStronglyConnectedError):
        build_plan(broken, [(cycles[0], F(1))])


def test_plan_connectors_short_and_composing():
    rng = random.Random(14)
    for _ in range(20):
        g = random_strongly_connected_graph(rng)
        cycles = enumerate_cycles(g)
        if len(cycles) < 2:
            continue
        chosen = [cycles[0], cycles[-1]]
        plan = build_plan(g, [(chosen[0], F(1, 2)), (chosen[1], F(1, 2))])
        for conn in plan.connectors:
            assert len(conn) < len(g.vertices)
        prefix = schedule(plan, 6)
        path_displacement(g, prefix)  # raises if anything fails to compose


# ---------------------------------------------------------------------------
# scheduling


def test_schedule_hand_trace():
    # one unit loop, weight 1: stage 1 emits the loop once, stage 2 twice,
    # stage 2 runs twice, so the prefix is 1 + 2 + 2 = 5 edges long
    g = parse_dgf("dim 1\nvertex A\nedge A A 1")
    c = enumerate_cycles(g)[0]
    plan = build_plan(g, [(c, F(1))])
    assert schedule(plan, 2) == (0, 0, 0, 0, 0)


def test_schedule_length_formula(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    plan = build_plan(honeycomb, [(cycles[2], F(1, 3)), (cycles[3], F(2, 3))])
    k_max = 9
    prefix = schedule(plan, k_max)
    expected = 0
    for k in range(1, k_max + 1):
        stage = sum(len(p) for p in plan.connectors)
        for cycle, weight in plan.cycles:
            stage += math.floor(k * weight / cycle.length) * cycle.length
        expected += k * stage
    assert len(prefix) == expected


def test_schedule_budget(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    plan = build_plan(honeycomb, [(cycles[0], F(1))])
    with pytest.raises(BudgetError):
        schedule(plan, 100, budget=50)


def test_schedule_converges_to_mixture(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    # velocities (1/2, 0) and (0, 1/2)
    plan = build_plan(honeycomb, [(cycles[2], F(1, 2)), (cycles[3], F(1, 2))])
    prefix = schedule(plan, 40)
    v = empirical_velocity(honeycomb, prefix)
    gap = max(abs(a - b) for a, b in zip(v, (F(1, 4), F(1, 4))))
    assert gap <= F(1, 20)


def test_schedule_k_max_validation(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    plan = build_plan(honeycomb, [(cycles[0], F(1))])
    with pytest.raises(ValueError):
        schedule(plan, 0)


# ---------------------------------------------------------------------------
# convergence bound


def test_convergence_zero_for_pure_cycle(honeycomb):
    poly = velocity_polytope(honeycomb)
    assert convergence_check(honeycomb, (0, 3) * 6, poly) == 0


def test_convergence_bound_random_walk(honeycomb):
    poly = velocity_polytope(honeycomb)
    rng = random.Random(10)
    walk = random_walk(honeycomb, rng, 100)
    # C = 1 and |V| = 2 for this fixture
    assert convergence_check(honeycomb, walk, poly) < F(2 * 2 * 1, 100)


def test_convergence_zero_on_scheduled_prefix(honeycomb):
    cycles = enumerate_cycles(honeycomb)
    plan = build_plan(honeycomb, [(cycles[2], F(2, 5)), (cycles[6], F(3, 5))])
    prefix = schedule(plan, 12)
    poly = velocity_polytope(honeycomb)
    # connectors are empty, so the prefix is a mixture of whole cycles
    assert convergence_check(honeycomb, prefix, poly) == 0


def test_convergence_dimension_mismatch(honeycomb, pm2):
    poly = velocity_polytope(pm2)
    with pytest.raises(ValueError):
        convergence_check(honeycomb, (0, 3), poly)


def test_velocity_base_independence_bound():
    rng = random.Random(11)
    for _ in range(15):
        g = random_strongly_connected_graph(rng)
        gauge = random_gauge(g, rng)
        moved = gauge_transform(g, gauge)
        n = rng.randint(5, 40)
        walk = random_walk(g, rng, n)
        v1 = empirical_velocity(g, walk)
        v2 = empirical_velocity(moved, walk)
        bound = F(2 * max(inf_norm(vec) for vec in gauge), n)
        assert max(abs(a - b) for a, b in zip(v1, v2)) <= bound
