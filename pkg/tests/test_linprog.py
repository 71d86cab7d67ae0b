from __future__ import annotations

from fractions import Fraction

from velo.linprog import solve_lp, solve_standard_lp

F = Fraction


def test_simple_bounded_minimum():
    # min -x - y  s.t.  x + y <= 3/2, x <= 1, y <= 1
    sol = solve_lp(
        [F(-1), F(-1)],
        ub=([[F(1), F(1)], [F(1), F(0)], [F(0), F(1)]], [F(3, 2), F(1), F(1)]),
    )
    assert sol.status == "optimal"
    assert sol.value == F(-3, 2)
    x, y = sol.x
    assert x + y == F(3, 2) and 0 <= x <= 1 and 0 <= y <= 1


def test_equality_constraint():
    # min x + y  s.t.  x + 2y = 2
    sol = solve_lp([F(1), F(1)], eq=([[F(1), F(2)]], [F(2)]))
    assert sol.status == "optimal"
    assert sol.value == F(1)
    assert sol.x == (F(0), F(1))


def test_infeasible():
    sol = solve_standard_lp([F(0), F(0)], [[F(1), F(1)]], [F(-1)])
    assert sol.status == "infeasible"


def test_unbounded():
    sol = solve_lp([F(-1), F(0)], ub=([[F(-1), F(1)]], [F(1)]))
    assert sol.status == "unbounded"


def test_exact_fractional_solution():
    sol = solve_standard_lp([F(1)], [[F(3)]], [F(1)])
    assert sol.status == "optimal"
    assert sol.value == F(1, 3)
    assert sol.x == (F(1, 3),)


def test_beale_degenerate_cycling_example():
    # The classic instance on which naive pivoting cycles; Bland's rule must finish.
    cost = [F(-3, 4), F(150), F(-1, 50), F(6)]
    rows = [
        [F(1, 4), F(-60), F(-1, 25), F(9)],
        [F(1, 2), F(-90), F(-1, 50), F(3)],
        [F(0), F(0), F(1), F(0)],
    ]
    rhs = [F(0), F(0), F(1)]
    sol = solve_lp(cost, ub=(rows, rhs))
    assert sol.status == "optimal"
    assert sol.value == F(-1, 20)


def test_redundant_rows():
    sol = solve_standard_lp(
        [F(1), F(0)],
        [[F(1), F(1)], [F(2), F(2)]],
        [F(1), F(2)],
    )
    assert sol.status == "optimal"
    assert sol.value == F(0)
    assert sol.x == (F(0), F(1))


def test_negative_rhs_normalization():
    # -x = -2 is x = 2 after normalization
    sol = solve_standard_lp([F(1)], [[F(-1)]], [F(-2)])
    assert sol.status == "optimal"
    assert sol.x == (F(2),)


def test_zero_problem():
    sol = solve_standard_lp([], [], [])
    assert sol.status == "optimal"
    assert sol.value == 0
    assert sol.x == ()
