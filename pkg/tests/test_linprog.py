from fractions import Fraction

from gkzrank.linprog import feasible_point, in_convex_hull, solve_lp


def test_simple_max():
    res = solve_lp(2, [1, 1], a_ub=[[1, 0], [0, 1], [1, 1]], b_ub=[2, 3, 4], maximize=True)
    assert res.status == "optimal"
    assert res.objective == 4


def test_equality_constraints():
    res = solve_lp(
        2, [0, 1], a_ub=[[0, 1]], b_ub=[5], a_eq=[[1, 1]], b_eq=[1], maximize=True
    )
    assert res.status == "optimal"
    assert res.objective == 5
    assert res.x[0] + res.x[1] == 1


def test_exact_fractions():
    # optimum at a genuinely fractional vertex
    res = solve_lp(
        2,
        [1, 1],
        a_ub=[[3, 1], [1, 3]],
        b_ub=[1, 1],
        maximize=True,
    )
    assert res.status == "optimal"
    assert res.objective == Fraction(1, 2)
    assert res.x == (Fraction(1, 4), Fraction(1, 4))


def test_infeasible_with_farkas():
    res = solve_lp(1, None, a_ub=[[1], [-1]], b_ub=[0, -1])
    assert res.status == "infeasible"
    y_ub, y_eq = res.farkas
    # certificate: y >= 0, y.A = 0, y.b < 0 (verified internally too)
    assert all(v >= 0 for v in y_ub)
    assert y_ub[0] * 1 + y_ub[1] * (-1) == 0
    assert y_ub[0] * 0 + y_ub[1] * (-1) < 0


def test_unbounded():
    res = solve_lp(1, [1], a_ub=[[-1]], b_ub=[0], maximize=True)
    assert res.status == "unbounded"


def test_feasible_point():
    x = feasible_point(2, a_ub=[[1, 1]], b_ub=[3], a_eq=[[1, -1]], b_eq=[1])
    assert x is not None
    assert x[0] - x[1] == 1
    assert x[0] + x[1] <= 3
    assert feasible_point(1, a_ub=[[1], [-1]], b_ub=[-1, -1]) is None


def test_in_convex_hull():
    tri = [(1, 0), (0, 1), (-1, -1)]
    assert in_convex_hull((0, 0), tri)
    assert in_convex_hull((1, 0), tri)
    assert not in_convex_hull((1, 1), tri)
    assert in_convex_hull(
        (Fraction(1, 2), Fraction(1, 2)), [(1, 0), (0, 1)]
    )


def test_degenerate_pivoting_terminates():
    # a degenerate feasibility system with many redundant constraints
    rows = [[1, 1, 1], [2, 2, 2], [3, 3, 3], [-1, -1, -1], [1, 0, 0]]
    rhs = [1, 2, 3, -1, 0]
    x = feasible_point(3, a_ub=rows, b_ub=rhs, a_eq=[[1, 1, 1]], b_eq=[1])
    assert x is not None
    assert sum(x) == 1
