import math
import random
from fractions import Fraction as F

import pytest

from loglie import liealg, linalg
from loglie.errors import (IrrationalWeightError, NonSplitError,
                           NotCommutingError, NotSemisimpleError)
from loglie.polyalg import Ring
from loglie.weights import (WeightDiagram, compute_M, levi_weight_diagram,
                            normalize_cartan, rank_lower_bound_check,
                            sumset_avoidance, theorem13_check,
                            verify_certificate, weight_diagram, weight_of_f)


def diag(*entries):
    n = len(entries)
    return [[F(entries[i]) if i == j else F(0) for j in range(n)] for i in range(n)]


def make_W(points):
    entries = {tuple(F(c) for c in p): 1 for p in points}
    rank = len(points[0]) if points else 0
    return WeightDiagram(rank=rank, entries=entries)


# -- weight_diagram ------------------------------------------------------------

def test_diagonal_matrix_diagram():
    W = weight_diagram([diag(-3, -1, 1, 3)])
    assert W.entries == {(F(-3),): 1, (F(-1),): 1, (F(1),): 1, (F(3),): 1}
    assert W.total == 4


def test_empty_cartan_degenerate():
    W = weight_diagram([], dim=5)
    assert W.entries == {(): 5}


def test_identity_matrix_diagram():
    W = weight_diagram([linalg.identity(3)])
    assert W.entries == {(F(1),): 3}


def test_non_semisimple_rejected():
    with pytest.raises(NotSemisimpleError):
        weight_diagram([[[F(1), F(1)], [F(0), F(1)]]])


def test_irrational_rejected():
    with pytest.raises(IrrationalWeightError):
        weight_diagram([[[F(0), F(1)], [F(2), F(0)]]])  # eigenvalues +-sqrt(2)


def test_non_commuting_rejected():
    a = [[F(0), F(1)], [F(0), F(0)]]
    b = [[F(1), F(0)], [F(0), F(-1)]]
    with pytest.raises(NotCommutingError):
        weight_diagram([a, b])


def test_simultaneous_two_matrix_diagram():
    W = weight_diagram([diag(1, 1, -1, -1), diag(1, -1, 1, -1)])
    assert set(W.entries) == {(F(1), F(1)), (F(1), F(-1)), (F(-1), F(1)), (F(-1), F(-1))}


# -- normalize_cartan -------------------------------------------------------------

def test_normalize_sl2_defining_representation():
    h = diag(1, -1)
    e = [[F(0), F(1)], [F(0), F(0)]]
    f = [[F(0), F(0)], [F(1), F(0)]]
    mla = liealg.MatrixLieAlgebra([h, e, f])
    s_alg = mla.abstract
    hv = liealg.cartan_subalgebra(s_alg)
    mats = normalize_cartan(s_alg, hv, mla.matrix_of)
    W = weight_diagram(mats)
    assert W.entries == {(F(-1),): 1, (F(1),): 1}


def test_normalize_quartic_levi(ex7_initial):
    diagram, _, _ = levi_weight_diagram(ex7_initial)
    assert diagram.entries == {(F(-3),): 1, (F(-1),): 1, (F(1),): 1, (F(3),): 1}
    # +-symmetry of the diagram (Weyl invariance for sl2 Levi factors)
    for w, m in diagram.entries.items():
        assert diagram.entries[tuple(-c for c in w)] == m


def kron(A, B):
    n, m = len(A), len(B)
    out = linalg.zeros(n * m, n * m)
    for i in range(n):
        for j in range(n):
            for k in range(m):
                for l in range(m):
                    out[i * m + k][j * m + l] = A[i][j] * B[k][l]
    return out


def test_normalize_rank_two_product():
    # sl2 x sl2 acting on the tensor of the defining representations
    h = diag(1, -1)
    e = [[F(0), F(1)], [F(0), F(0)]]
    f = [[F(0), F(0)], [F(1), F(0)]]
    eye = linalg.identity(2)
    mats = [kron(h, eye), kron(e, eye), kron(f, eye),
            kron(eye, h), kron(eye, e), kron(eye, f)]
    mla = liealg.MatrixLieAlgebra(mats)
    s_alg = mla.abstract
    hv = liealg.cartan_subalgebra(s_alg)
    assert len(hv) == 2
    cartan_mats = normalize_cartan(s_alg, hv, mla.matrix_of)
    W = weight_diagram(cartan_mats)
    assert W.total == 4
    assert sorted(W.entries) == sorted(
        {(F(1), F(1)), (F(1), F(-1)), (F(-1), F(1)), (F(-1), F(-1))})


def test_normalize_non_split_raises():
    # so(3) over Q: rotations, irrational root decomposition
    j12 = [[F(0), F(1), F(0)], [F(-1), F(0), F(0)], [F(0), F(0), F(0)]]
    j13 = [[F(0), F(0), F(1)], [F(0), F(0), F(0)], [F(-1), F(0), F(0)]]
    j23 = [[F(0), F(0), F(0)], [F(0), F(0), F(1)], [F(0), F(-1), F(0)]]
    mla = liealg.MatrixLieAlgebra([j12, j13, j23])
    s_alg = mla.abstract
    hv = liealg.cartan_subalgebra(s_alg)
    with pytest.raises(NonSplitError):
        normalize_cartan(s_alg, hv, mla.matrix_of)


# -- sumset avoidance ----------------------------------------------------------------

W4 = make_W([(-3,), (-1,), (1,), (3,)])


def test_avoidance_top_facet():
    cert = sumset_avoidance([(F(3),)], W4, 4)
    assert cert.verdict == "in"
    assert verify_certificate(cert, W4, 4)


def test_avoidance_excluded_with_witness():
    cert = sumset_avoidance([(F(1),)], W4, 4)
    assert cert.verdict == "excluded"
    assert sum(cert.witness_counts.values()) >= 3
    assert cert.witness_target == (F(3),)
    assert verify_certificate(cert, W4, 4)


def test_avoidance_empty_subset():
    cert = sumset_avoidance([], W4, 4)
    assert cert.verdict == "in"


def test_avoidance_zero_in_hull():
    cert = sumset_avoidance([(F(-3),), (F(3),)], W4, 3)
    assert cert.verdict == "excluded"
    assert verify_certificate(cert, W4, 3)


def test_avoidance_requires_k_at_least_3():
    with pytest.raises(ValueError):
        sumset_avoidance([(F(3),)], W4, 2)


# -- compute_M --------------------------------------------------------------------------

def test_compute_M_quartic_diagram():
    res = compute_M(W4, 4)
    assert res.value == 1
    assert res.maximizer in (((F(-3),),), ((F(3),),))
    assert res.proven


def test_compute_M_small_k_vacuous():
    assert compute_M(W4, 2).value == -math.inf


def test_compute_M_zero_levi_degenerate():
    W = weight_diagram([], dim=3)
    assert compute_M(W, 4).value == -math.inf


def test_compute_M_monotone_in_k():
    rng = random.Random(77)
    for _ in range(15):
        pts = set()
        while len(pts) < rng.randint(1, 5):
            pts.add((rng.randint(-4, 4), rng.randint(-4, 4)))
        W = make_W(sorted(pts))
        values = [compute_M(W, k).value for k in (3, 4, 5)]
        assert values == sorted(values)


def test_certificates_re_verify():
    rng = random.Random(123)
    for _ in range(10):
        pts = set()
        while len(pts) < rng.randint(1, 5):
            pts.add((rng.randint(-4, 4), rng.randint(-4, 4)))
        W = make_W(sorted(pts))
        res = compute_M(W, 4)
        for C, cert in res.certificates.items():
            assert verify_certificate(cert, W, 4)


# -- rank lower bound ---------------------------------------------------------------------

def test_rank_bound_quartic(ex7_initial):
    diagram, levi, _ = levi_weight_diagram(ex7_initial)
    assert rank_lower_bound_check(1, diagram, 4)


def test_rank_bound_rank_two():
    W = make_W([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    assert rank_lower_bound_check(2, W, 3)


# -- weight of f --------------------------------------------------------------------------

def test_weight_of_f_quartic(ex7_initial, ex7_poly):
    diagram, levi, h_local = levi_weight_diagram(ex7_initial)
    lie = ex7_initial.lie

    def to_matrix(local):
        coords = [F(0)] * lie.dim
        for c, b in zip(local, levi):
            coords = [x + c * y for x, y in zip(coords, b)]
        return ex7_initial.matrix_of(coords)

    s_alg = liealg.restrict(lie, levi)
    mats = normalize_cartan(s_alg, h_local, to_matrix)
    wt = weight_of_f(ex7_poly, mats, diagram.basis_change)
    assert wt == (F(0),)


def test_weight_of_f_simple_cases():
    R = Ring(("x", "y"))
    assert weight_of_f(R.parse("x*y"), [diag(1, -1)]) == (F(0),)
    assert weight_of_f(R.parse("x^2 + y^3"), [diag(1, 1)]) is None
    assert weight_of_f(R.parse("x"), []) == ()


# -- theorem 13 -----------------------------------------------------------------------------

def test_theorem13_quartic(ex7_poly):
    rep = theorem13_check(ex7_poly)
    assert (rep.order, rep.M, rep.sing_dim, rep.verdict) == (4, 1, 2, "holds")
    assert rep.M < rep.sing_dim  # not sharp here


def test_theorem13_quadric_vacuous():
    R = Ring(("x", "y", "z"))
    rep = theorem13_check(R.parse("x^2 + y^2 + z^2"))
    assert rep.verdict == "vacuous"
    assert rep.order == 2


def test_theorem13_cusp_vacuous():
    R = Ring(("x", "y"))
    rep = theorem13_check(R.parse("x^3 + y^4"))
    assert rep.verdict == "vacuous"
    assert rep.M == -math.inf
    assert rep.sing_dim == 0
