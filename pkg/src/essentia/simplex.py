"""Exact linear programming over rationals.

Dense two-phase tableau simplex with Bland's anti-cycling rule: the
entering column is the smallest index with negative reduced cost, the
leaving row breaks ratio ties by smallest basic variable index.  All
arithmetic is fractions.Fraction, so optima are exact and comparisons
decidable.  Problem sizes here are tiny (tens of rows), so the dense
tableau is the simple, right-sized choice.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class Unbounded(ValueError):
    pass


class Infeasible(ValueError):
    pass


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for r, tr in enumerate(tableau):
        if r != row and tr[col]:
            f = tr[col]
            base = tableau[row]
            tableau[r] = [a - f * b for a, b in zip(tr, base)]
    basis[row] = col


def _optimize(
    tableau: list[list[Fraction]],
    basis: list[int],
    cost: Sequence[Fraction],
    allowed: int,
) -> None:
    """Run Bland pivots to optimality; columns >= allowed never enter."""
    m = len(tableau)
    width = len(tableau[0]) - 1
    while True:
        lam = [cost[basis[i]] for i in range(m)]
        entering = -1
        for j in range(min(allowed, width)):
            red = cost[j] - sum(lam[i] * tableau[i][j] for i in range(m) if tableau[i][j])
            if red < 0:
                entering = j
                break
        if entering < 0:
            return
        leave = -1
        best_ratio: Fraction | None = None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            raise Unbounded("no leaving row for entering column")
        _pivot(tableau, basis, leave, entering)


def simplex_min(
    costs: Sequence,
    rows: Sequence[Sequence],
    rhs: Sequence,
) -> tuple[Fraction, list[Fraction]]:
    """Minimize costs . x subject to rows[i] . x >= rhs[i] and x >= 0.

    Returns (optimal value, optimal x).  Raises Infeasible or Unbounded.
    """
    nx = len(costs)
    m = len(rows)
    c = [Fraction(v) for v in costs]
    if m == 0:
        if any(v < 0 for v in c):
            raise Unbounded("negative cost with no constraints")
        return Fraction(0), [Fraction(0)] * nx

    # Standard form: row . x - s = b, with the row negated when b < 0 so
    # every right-hand side is non-negative; artificials where the
    # surplus cannot start basic.
    n_art = sum(1 for b in rhs if Fraction(b) > 0)
    width = nx + m + n_art
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    art_col = nx + m
    for i, (row, b) in enumerate(zip(rows, rhs)):
        b = Fraction(b)
        line = [Fraction(v) for v in row] + [Fraction(0)] * (m + n_art) + [b]
        line[nx + i] = Fraction(-1)
        if b > 0:
            line[art_col] = Fraction(1)
            basis.append(art_col)
            art_col += 1
        else:
            line = [-v for v in line[:-1]] + [-b]
            basis.append(nx + i)
        tableau.append(line)

    if n_art:
        cost1 = [Fraction(0)] * (nx + m) + [Fraction(1)] * n_art
        _optimize(tableau, basis, cost1, allowed=width)
        value1 = sum(
            cost1[basis[i]] * tableau[i][-1] for i in range(len(tableau))
        )
        if value1 != 0:
            raise Infeasible("phase 1 ended with positive artificial mass")
        # Drive leftover artificials out of the basis, dropping redundant rows.
        i = 0
        while i < len(tableau):
            if basis[i] >= nx + m:
                col = next(
                    (j for j in range(nx + m) if tableau[i][j] != 0), None
                )
                if col is None:
                    del tableau[i]
                    del basis[i]
                    continue
                _pivot(tableau, basis, i, col)
            i += 1

    cost2 = c + [Fraction(0)] * (width - nx)
    _optimize(tableau, basis, cost2, allowed=nx + m)
    x = [Fraction(0)] * nx
    for i, bv in enumerate(basis):
        if bv < nx:
            x[bv] = tableau[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return value, x
