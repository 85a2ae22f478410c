from fractions import Fraction as F

from loglie import linalg, ratlp


def test_rref_solve_nullspace():
    A = linalg.fmat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert linalg.rank(A) == 2
    ns = linalg.nullspace(A)
    assert len(ns) == 1
    assert all(not v for v in linalg.mat_vec(A, ns[0]))
    x = linalg.solve(linalg.fmat([[2, 1], [1, 3]]), linalg.fvec([5, 5]))
    assert x == [F(2), F(1)]
    assert linalg.solve(linalg.fmat([[1, 1], [1, 1]]), linalg.fvec([0, 1])) is None


def test_det_and_charpoly():
    A = linalg.fmat([[2, 1], [1, 2]])
    assert linalg.det(A) == 3
    # char poly t^2 - 4t + 3, ascending coefficients
    assert linalg.charpoly(A) == [F(3), F(-4), F(1)]
    assert linalg.minpoly(linalg.identity(3)) == [F(-1), F(1)]


def test_rational_roots():
    # (t - 1)^2 (t + 2/3)
    p = linalg.upoly_mul([F(-1), F(1)], linalg.upoly_mul([F(-1), F(1)], [F(2, 3), F(1)]))
    roots, residual = linalg.rational_roots(p)
    assert residual == 0
    assert (F(1), 2) in roots and (F(-2, 3), 1) in roots
    roots, residual = linalg.rational_roots([F(1), F(0), F(1)])  # t^2 + 1
    assert roots == [] and residual == 2


def test_subspace_membership():
    space = linalg.Subspace([[1, 2, 0], [0, 0, 1]])
    assert space.contains([2, 4, 5])
    assert not space.contains([1, 0, 0])
    assert space.dim == 2


def test_intersect():
    U = [linalg.fvec([1, 0, 0]), linalg.fvec([0, 1, 0])]
    V = [linalg.fvec([0, 1, 1]), linalg.fvec([0, 1, -1])]
    inter = linalg.intersect(U, V)
    assert len(inter) == 1
    assert linalg.Subspace(inter).contains([0, 1, 0])


def test_lp_optimal_vertex():
    status, x, value = ratlp.solve(
        2, objective=[1, 1], ge=[([1, 2], 4), ([3, 1], 6)])
    assert status == ratlp.OPTIMAL
    assert x == [F(8, 5), F(6, 5)] and value == F(14, 5)


def test_lp_infeasible_and_unbounded():
    status, _, _ = ratlp.solve(1, eq=[([1], -3)])  # x = -3 with x >= 0
    assert status == ratlp.INFEASIBLE
    status, _, _ = ratlp.solve(1, objective=[1], maximize=True)
    assert status == ratlp.UNBOUNDED


def test_lp_free_variables_and_lower_bounds():
    point = ratlp.feasible(2, eq=[([1, 1], 0)], free={1}, lower={0: 2})
    assert point is not None
    assert point[0] >= 2 and point[0] + point[1] == 0
