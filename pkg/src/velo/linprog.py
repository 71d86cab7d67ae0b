"""Exact rational linear programming via two-phase simplex with Bland's rule.

All arithmetic is over fractions.Fraction; no floating point enters at any
stage, so feasibility, unboundedness, and optima are exact.  Bland's rule
(smallest eligible index for both entering and leaving variables) rules out
cycling even on degenerate problems.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = list[Fraction]


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    x: tuple[Fraction, ...] | None


def _pivot(tableau: list[Row], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    pivot_row = tableau[row]
    for r, other in enumerate(tableau):
        if r != row and other[col] != 0:
            f = other[col]
            tableau[r] = [a - f * b for a, b in zip(other, pivot_row)]
    basis[row] = col


def _run_simplex(tableau: list[Row], basis: list[int], allowed_cols: int) -> str:
    """Minimize with Bland's rule; the objective row is the last tableau row."""
    m = len(tableau) - 1
    obj = tableau[m]
    while True:
        enter = next((j for j in range(allowed_cols) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        leave = None
        best: Fraction | None = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and leave is not None and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(tableau, basis, leave, enter)
        obj = tableau[m]


def solve_standard_lp(
    cost: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> LpSolution:
    """Minimize cost.x subject to rows.x = rhs and x >= 0."""
    n = len(cost)
    m = len(rows)
    cost = [Fraction(c) for c in cost]
    tableau: list[Row] = []
    for row, b in zip(rows, rhs):
        if len(row) != n:
            raise ValueError("constraint row length does not match the cost vector")
        r = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            r = [-v for v in r]
            b = -b
        tableau.append(r + [Fraction(0)] * m + [b])
    for i in range(m):
        tableau[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]

    # Phase 1: minimize the artificial sum; its reduced-cost row under the
    # artificial basis is the negated column sum of the constraint rows.
    width = n + m + 1
    obj = [Fraction(0)] * width
    for i in range(m):
        for j in range(width):
            obj[j] -= tableau[i][j]
    for i in range(m):
        obj[n + i] = Fraction(0)
    tableau.append(obj)
    _run_simplex(tableau, basis, n + m)
    if -tableau[m][-1] > 0:
        return LpSolution("infeasible", None, None)

    # Drive leftover artificial basics out; rows that cannot pivot are redundant.
    drop: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                drop.append(i)
            else:
                _pivot(tableau, basis, i, col)
    if drop:
        tableau = [row for i, row in enumerate(tableau[:m]) if i not in drop] + [tableau[m]]
        basis = [b for i, b in enumerate(basis) if i not in drop]
        m = len(basis)

    # Phase 2 objective: reduced costs of the real objective under the basis.
    obj = cost + [Fraction(0)] * (len(tableau[0]) - n)
    for i in range(m):
        cb = cost[basis[i]] if basis[i] < n else Fraction(0)
        if cb != 0:
            obj = [a - cb * b for a, b in zip(obj, tableau[i])]
    tableau[m] = obj
    status = _run_simplex(tableau, basis, n)
    if status == "unbounded":
        return LpSolution("unbounded", None, None)
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tableau[i][-1]
    value = sum((c * v for c, v in zip(cost, x)), Fraction(0))
    return LpSolution("optimal", value, tuple(x))


def solve_lp(
    cost: Sequence[Fraction],
    eq: tuple[Sequence[Sequence[Fraction]], Sequence[Fraction]] | None = None,
    ub: tuple[Sequence[Sequence[Fraction]], Sequence[Fraction]] | None = None,
) -> LpSolution:
    """Minimize cost.x with optional equalities and <= rows, x >= 0.

    Upper-bound rows receive slack variables; the reported solution is
    truncated back to the original variables.
    """
    n = len(cost)
    eq_rows = [list(r) for r in eq[0]] if eq else []
    eq_rhs = list(eq[1]) if eq else []
    ub_rows = [list(r) for r in ub[0]] if ub else []
    ub_rhs = list(ub[1]) if ub else []
    n_slack = len(ub_rows)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for r, b in zip(eq_rows, eq_rhs):
        rows.append([Fraction(v) for v in r] + [Fraction(0)] * n_slack)
        rhs.append(Fraction(b))
    for k, (r, b) in enumerate(zip(ub_rows, ub_rhs)):
        slack = [Fraction(0)] * n_slack
        slack[k] = Fraction(1)
        rows.append([Fraction(v) for v in r] + slack)
        rhs.append(Fraction(b))
    full_cost = [Fraction(c) for c in cost] + [Fraction(0)] * n_slack
    sol = solve_standard_lp(full_cost, rows, rhs)
    if sol.status != "optimal":
        return sol
    return LpSolution("optimal", sol.value, sol.x[:n])
