"""Catalog of small Lie algebras used as oracles in the tests."""

from fractions import Fraction as F

from loglie.liealg import LieAlgebra, abelian, gl2, sl2


def heisenberg():
    return LieAlgebra(3, {(0, 1): [0, 0, 1]}, labels=("x", "y", "z"))


def two_dim_nonabelian():
    return LieAlgebra(2, {(0, 1): [0, 1]}, labels=("x", "y"))


def sl2_semidirect_v2():
    """sl2 acting on its defining two-dimensional module."""
    # basis (h, e, f, u, v); u, v of weights +1, -1.
    return LieAlgebra(5, {
        (0, 1): [0, 2, 0, 0, 0],
        (0, 2): [0, 0, -2, 0, 0],
        (1, 2): [1, 0, 0, 0, 0],
        (0, 3): [0, 0, 0, 1, 0],
        (0, 4): [0, 0, 0, 0, -1],
        (1, 4): [0, 0, 0, 1, 0],
        (2, 3): [0, 0, 0, 0, 1],
    }, labels=("h", "e", "f", "u", "v"))


def borel_sl3():
    """Upper-triangular traceless 3x3 matrices: h1, h2, e12, e23, e13."""
    return LieAlgebra(5, {
        (0, 2): [0, 0, 2, 0, 0],    # [h1, e12] = 2 e12
        (0, 3): [0, 0, 0, -1, 0],   # [h1, e23] = -e23
        (0, 4): [0, 0, 0, 0, 1],    # [h1, e13] = e13
        (1, 2): [0, 0, -1, 0, 0],   # [h2, e12] = -e12
        (1, 3): [0, 0, 0, 2, 0],    # [h2, e23] = 2 e23
        (1, 4): [0, 0, 0, 0, 1],    # [h2, e13] = e13
        (2, 3): [0, 0, 0, 0, 1],    # [e12, e23] = e13
    }, labels=("h1", "h2", "e12", "e23", "e13"))


def direct_sum(a, b):
    dim = a.dim + b.dim
    brackets = {}
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            vec = a.table[i][j]
            if any(vec):
                brackets[(i, j)] = list(vec) + [F(0)] * b.dim
    for i in range(b.dim):
        for j in range(i + 1, b.dim):
            vec = b.table[i][j]
            if any(vec):
                brackets[(a.dim + i, a.dim + j)] = [F(0)] * a.dim + list(vec)
    return LieAlgebra(dim, brackets,
                      labels=tuple(f"a.{l}" for l in a.labels)
                             + tuple(f"b.{l}" for l in b.labels))


def change_basis(g, rows):
    """The same algebra in the basis given by the rows (invertible matrix)."""
    from loglie.liealg import restrict
    basis = [[F(v) for v in row] for row in rows]
    return restrict(g, basis)


def catalog_with_radicals():
    """(algebra, radical dimension) pairs used by the radical oracle suite."""
    return [
        (abelian(1), 1), (abelian(2), 2), (abelian(3), 3), (abelian(4), 4),
        (heisenberg(), 3),
        (two_dim_nonabelian(), 2),
        (sl2(), 0),
        (gl2(), 1),
        (sl2_semidirect_v2(), 2),
        (borel_sl3(), 5),
    ]
