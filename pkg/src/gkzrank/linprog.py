"""Exact linear programming over the rationals.

A dense two-phase simplex with Bland's rule on Fraction arithmetic.  All
variables are free; callers encode non-negativity explicitly.  Strict
feasibility questions are posed by the callers as slack maximization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    objective: Fraction | None = None
    # for infeasible systems: multipliers y (>=0 on inequality rows) with
    # y.A_ub + z.A_eq = 0 and y.b_ub + z.b_eq < 0
    farkas: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None = None


class _Tableau:
    def __init__(self, rows, basis, ncols):
        self.rows = rows  # list of lists of Fractions, last entry = rhs
        self.basis = basis
        self.ncols = ncols

    def pivot(self, r, c):
        row = self.rows[r]
        inv = Fraction(1) / row[c]
        self.rows[r] = [v * inv for v in row]
        prow = self.rows[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, prow)]
        self.basis[r] = c


def _run_simplex(tab: _Tableau, costs, allowed):
    """Minimize costs over the tableau with Bland's rule; returns objective."""
    m = len(tab.rows)
    while True:
        # reduced costs: c_j - c_B . column_j
        cb = [costs[tab.basis[i]] for i in range(m)]
        entering = -1
        for j in range(tab.ncols):
            if not allowed[j] or j in tab.basis:
                continue
            red = costs[j]
            for i in range(m):
                if cb[i]:
                    red -= cb[i] * tab.rows[i][j]
            if red < 0:
                entering = j
                break  # Bland: first improving index
        if entering < 0:
            value = Fraction(0)
            for i in range(m):
                if cb[i]:
                    value += cb[i] * tab.rows[i][-1]
            return value
        leaving = -1
        best = None
        for i in range(m):
            a = tab.rows[i][entering]
            if a > 0:
                ratio = tab.rows[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and tab.basis[i] < tab.basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            return None  # unbounded below
        tab.pivot(leaving, entering)


def solve_lp(
    nvars: int,
    objective=None,
    a_ub=(),
    b_ub=(),
    a_eq=(),
    b_eq=(),
    maximize: bool = False,
) -> LPResult:
    """Solve min/max objective.x subject to a_ub.x <= b_ub and a_eq.x = b_eq.

    The x variables are unrestricted in sign.
    """
    a_ub = [list(map(Fraction, row)) for row in a_ub]
    b_ub = [Fraction(v) for v in b_ub]
    a_eq = [list(map(Fraction, row)) for row in a_eq]
    b_eq = [Fraction(v) for v in b_eq]
    if objective is None:
        obj = [Fraction(0)] * nvars
    else:
        obj = [Fraction(v) for v in objective]
        if maximize:
            obj = [-v for v in obj]

    n_ub = len(a_ub)
    n_eq = len(a_eq)
    m = n_ub + n_eq
    # columns: x+ (nvars) | x- (nvars) | slacks (n_ub) | artificials (m) | rhs
    nx = 2 * nvars
    ncols = nx + n_ub + m
    rows = []
    flipped = []
    for r in range(m):
        if r < n_ub:
            coeff, rhs = a_ub[r], b_ub[r]
        else:
            coeff, rhs = a_eq[r - n_ub], b_eq[r - n_ub]
        row = [Fraction(0)] * (ncols + 1)
        for j in range(nvars):
            row[j] = coeff[j]
            row[nvars + j] = -coeff[j]
        if r < n_ub:
            row[nx + r] = Fraction(1)
        row[-1] = rhs
        flip = rhs < 0
        if flip:
            row = [-v for v in row[:-1]] + [-rhs]
        flipped.append(flip)
        row[nx + n_ub + r] = Fraction(1)
        rows.append(row)

    basis = [nx + n_ub + r for r in range(m)]
    tab = _Tableau(rows, basis, ncols)

    # phase 1: minimize the artificial sum
    costs1 = [Fraction(0)] * ncols
    for r in range(m):
        costs1[nx + n_ub + r] = Fraction(1)
    allowed = [True] * ncols
    value = _run_simplex(tab, costs1, allowed)
    if value is None:
        raise RuntimeError("phase-1 objective unbounded; malformed tableau")
    if value > 0:
        # Farkas certificate from the phase-1 duals: y_r = 1 - reduced cost of
        # the r-th artificial column
        duals = []
        cb = [costs1[tab.basis[i]] for i in range(len(tab.rows))]
        for r in range(m):
            col = nx + n_ub + r
            red = costs1[col]
            for i in range(len(tab.rows)):
                if cb[i]:
                    red -= cb[i] * tab.rows[i][col]
            y = Fraction(1) - red
            if flipped[r]:
                y = -y
            duals.append(y)
        y_ub = tuple(-v for v in duals[:n_ub])
        y_eq = tuple(-v for v in duals[n_ub:])
        _verify_farkas(nvars, a_ub, b_ub, a_eq, b_eq, y_ub, y_eq)
        return LPResult(status="infeasible", farkas=(y_ub, y_eq))

    # drive remaining artificial variables out of the basis where possible
    for i in range(m):
        if tab.basis[i] >= nx + n_ub:
            pivot_col = -1
            for j in range(nx + n_ub):
                if tab.rows[i][j] != 0:
                    pivot_col = j
                    break
            if pivot_col >= 0:
                tab.pivot(i, pivot_col)

    for j in range(nx + n_ub, ncols):
        allowed[j] = False

    costs2 = [Fraction(0)] * ncols
    for j in range(nvars):
        costs2[j] = obj[j]
        costs2[nvars + j] = -obj[j]
    value = _run_simplex(tab, costs2, allowed)
    if value is None:
        return LPResult(status="unbounded")

    x = [Fraction(0)] * nx
    for i, b in enumerate(tab.basis):
        if b < nx:
            x[b] = tab.rows[i][-1]
    point = tuple(x[j] - x[nvars + j] for j in range(nvars))
    objective_value = sum(o * v for o, v in zip(obj, point))
    if maximize:
        objective_value = -objective_value
    return LPResult(status="optimal", x=point, objective=objective_value)


def _verify_farkas(nvars, a_ub, b_ub, a_eq, b_eq, y_ub, y_eq):
    for y in y_ub:
        if y < 0:
            raise RuntimeError("farkas certificate extraction failed (sign)")
    for j in range(nvars):
        total = sum(y * row[j] for y, row in zip(y_ub, a_ub))
        total += sum(z * row[j] for z, row in zip(y_eq, a_eq))
        if total != 0:
            raise RuntimeError("farkas certificate extraction failed (combination)")
    rhs = sum(y * b for y, b in zip(y_ub, b_ub)) + sum(z * b for z, b in zip(y_eq, b_eq))
    if rhs >= 0:
        raise RuntimeError("farkas certificate extraction failed (rhs)")


def feasible_point(nvars, a_ub=(), b_ub=(), a_eq=(), b_eq=()):
    """A feasible point of the system, or None."""
    res = solve_lp(nvars, None, a_ub, b_ub, a_eq, b_eq)
    return res.x if res.status == "optimal" else None


def in_convex_hull(point, generators) -> bool:
    """Exact membership of point in the convex hull of the generators."""
    gens = list(generators)
    if not gens:
        return False
    dim = len(point)
    k = len(gens)
    a_eq = []
    b_eq = []
    for i in range(dim):
        a_eq.append([Fraction(g[i]) for g in gens])
        b_eq.append(Fraction(point[i]))
    a_eq.append([Fraction(1)] * k)
    b_eq.append(Fraction(1))
    a_ub = [[Fraction(-1) if j == i else Fraction(0) for j in range(k)] for i in range(k)]
    b_ub = [Fraction(0)] * k
    return feasible_point(k, a_ub, b_ub, a_eq, b_eq) is not None
