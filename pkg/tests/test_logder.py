import math
from fractions import Fraction as F

import pytest

from loglie import liealg
from loglie.errors import NotIsolatedError, NotReducedError
from loglie.groebner import VecPoly, module_membership
from loglie.logder import (VectorField, euler_split, initial_lie_algebra,
                           jet_truncation, koszul_fields,
                           logarithmic_derivations, poly_determinant,
                           product_test, saito_freeness)
from loglie.polyalg import Ring

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def field(ring, *exprs):
    return VectorField(ring.parse(e) for e in exprs)


# -- apply and bracket -----------------------------------------------------------

def test_apply_euler_like():
    v = field(R2, "x", "0")
    assert v.apply(R2.parse("x^2")) == R2.parse("2*x^2")


def test_bracket_sl2_relation():
    e = field(R2, "0", "x")   # x d/dy
    f = field(R2, "y", "0")   # y d/dx
    assert e.bracket(f) == field(R2, "x", "-y")  # x dx - y dy


def test_bracket_closure_in_module(ex7_module):
    gens = ex7_module.generator_vecpolys()
    br = ex7_module.generators[1].bracket(ex7_module.generators[2])
    assert module_membership(br.to_vecpoly(), gens) is not None
    br2 = ex7_module.generators[2].bracket(ex7_module.generators[3])
    assert module_membership(br2.to_vecpoly(), gens) is not None


# -- logarithmic derivations -------------------------------------------------------

def test_normal_crossing_generators():
    m = logarithmic_derivations(R2.parse("x*y"))
    assert m.graded and len(m.generators) == 2
    # same module as {x dx, y dy}: membership both ways
    gens = m.generator_vecpolys()
    x, y = R2.gens()
    xdx = VecPoly((x, R2.zero))
    ydy = VecPoly((R2.zero, y))
    assert module_membership(xdx, gens) is not None
    assert module_membership(ydy, gens) is not None
    for g in gens:
        assert module_membership(g, [xdx, ydy]) is not None


def test_quartic_four_generators(ex7_module):
    assert len(ex7_module.generators) == 4
    assert ex7_module.graded
    for g, c in zip(ex7_module.generators, ex7_module.cofactors):
        assert g.apply(ex7_module.f) == c * ex7_module.f


def test_quadric_generators_rotations():
    m = logarithmic_derivations(R3.parse("x^2 + y^2 + z^2"))
    assert len(m.generators) == 4
    gens = m.generator_vecpolys()
    x, y, z = R3.gens()
    euler = VecPoly((x, y, z))
    rot = VecPoly((y, -x, R3.zero))
    assert module_membership(euler, gens) is not None
    assert module_membership(rot, gens) is not None


def test_not_reduced_rejected():
    with pytest.raises(NotReducedError):
        logarithmic_derivations(R2.parse("x^2*y"))


# -- product test -------------------------------------------------------------------

def test_product_test_cases(ex7_module):
    assert product_test(ex7_module)
    assert product_test(logarithmic_derivations(R2.parse("x*y")))
    assert not product_test(logarithmic_derivations(R2.parse("x")))


# -- initial Lie algebra --------------------------------------------------------------

def test_normal_crossing_abelian():
    for ring in (R2, R3):
        f = ring.parse("*".join(ring.variables))
        data = initial_lie_algebra(logarithmic_derivations(f))
        assert data.dim == ring.nvars
        assert data.kernel_dim == 0
        assert all(not any(vec) for row in data.lie.table for vec in row)


def test_quartic_initial_is_gl2(ex7_initial):
    assert ex7_initial.dim == 4
    assert ex7_initial.kernel_dim == 0
    assert not liealg.is_solvable(ex7_initial.lie)
    assert len(liealg.radical(ex7_initial.lie)) == 1
    levi = liealg.levi_subalgebra(ex7_initial.lie)
    assert len(levi) == 3


def test_cusp_structure_constants():
    data = initial_lie_algebra(logarithmic_derivations(R2.parse("x^3 + y^4")))
    assert data.dim == 2
    assert data.kernel_dim == 1
    assert liealg.is_solvable(data.lie)
    assert not liealg.is_nilpotent(data.lie)
    # [g1, g2] = c g2 with c nonzero after sorting by degree
    vec = data.lie.table[0][1]
    assert vec[0] == 0 and vec[1] != 0


def test_structure_constants_satisfy_jacobi(ex7_initial):
    assert ex7_initial.lie.validate() is None


# -- Saito freeness -------------------------------------------------------------------

def test_free_quartic(ex7_module, ex7_poly):
    cert = saito_freeness(ex7_module)
    assert cert is not None
    assert cert.determinant == ex7_poly * cert.unit.constant_term()
    assert cert.unit.constant_term() != 0


def test_free_normal_crossing():
    m = logarithmic_derivations(R3.parse("x*y*z"))
    cert = saito_freeness(m)
    assert cert is not None


def test_quadric_not_free():
    m = logarithmic_derivations(R3.parse("x^2 + y^2 + z^2"))
    assert len(m.generators) == 4
    assert saito_freeness(m) is None


def test_poly_determinant():
    x, y = R2.gens()
    mat = [[x, y], [y, x]]
    assert poly_determinant(mat) == x * x - y * y


# -- Euler split ---------------------------------------------------------------------

def test_euler_split_cusp():
    m = logarithmic_derivations(R2.parse("x^3 + y^4"))
    euler, anns = euler_split(m)
    assert euler.apply(m.f) == m.f
    assert anns
    for a in anns:
        assert a.apply(m.f).is_zero
    # annihilators proportional to 4 y^3 dx - 3 x^2 dy
    ref = field(R2, "4*y^3", "-3*x^2")
    gens = [ref.to_vecpoly()]
    for a in anns:
        assert module_membership(a.to_vecpoly(), gens) is not None


def test_euler_split_normal_crossing():
    m = logarithmic_derivations(R2.parse("x*y"))
    euler, anns = euler_split(m)
    assert euler == field(R2, "1/2*x", "1/2*y")
    for a in anns:
        assert a.apply(m.f).is_zero


def test_euler_split_absent():
    m = logarithmic_derivations(R2.parse("x^3 + y^3 + x^2*y^2"))
    assert euler_split(m) is None


# -- Koszul fields --------------------------------------------------------------------

def test_koszul_annihilate():
    f = R2.parse("x^2 + y^2")
    fields = koszul_fields(f)
    assert len(fields) == 1
    assert fields[0] == field(R2, "-2*y", "2*x")
    for g in koszul_fields(R2.parse("x^3 + y^4")):
        assert g.apply(R2.parse("x^3 + y^4")).is_zero


def test_koszul_requires_isolated():
    with pytest.raises(NotIsolatedError):
        koszul_fields(R3.parse("x*y*z"))


# -- jets --------------------------------------------------------------------------

def test_jet_zero_matches_linear_parts(ex7_module, ex7_initial):
    alg, _ = jet_truncation(ex7_module, 0)
    assert alg.dim == 4  # faithful linear algebra already


def test_jet_zero_cusp():
    m = logarithmic_derivations(R2.parse("x^3 + y^4"))
    alg, _ = jet_truncation(m, 0)
    assert alg.dim == 1


def _field_span_dim(fields):
    from loglie import linalg
    keys = {}
    sparse = []
    for vf in fields:
        vec = {}
        for comp, poly in enumerate(vf.coeffs):
            for mono, c in poly.terms.items():
                keys.setdefault((comp, mono), len(keys))
                vec[keys[(comp, mono)]] = c
        sparse.append(vec)
    width = max(len(keys), 1)
    span = linalg.Subspace(dim=width)
    for vec in sparse:
        dense = [F(0)] * width
        for idx, c in vec.items():
            dense[idx] = c
        span.add(dense)
    return span.dim


def test_jet_dims_monotone_and_surjective():
    m = logarithmic_derivations(R2.parse("x^3 + y^4"))
    dims = []
    bases = []
    for k in range(4):
        alg, basis = jet_truncation(m, k)
        dims.append(alg.dim)
        bases.append(basis)
    assert dims == sorted(dims)
    # truncating the level-k basis to level l spans the level-l jet space
    for k in range(1, 4):
        for l in range(k):
            projected = [b.truncate(l + 1) for b in bases[k]]
            assert _field_span_dim(projected) == dims[l]


def test_jet_cap_enforced():
    m = logarithmic_derivations(R2.parse("x*y"))
    with pytest.raises(ValueError):
        jet_truncation(m, 9)


def test_bracket_order_additivity():
    # fields with coefficients of order >= a, >= b bracket to order >= a+b-1
    from itertools import product
    ring = R2
    x, y = ring.gens()
    samples = {
        2: [field(ring, "x^2", "x*y"), field(ring, "y^2", "x^2 + x*y")],
        3: [field(ring, "x^3", "x*y^2"), field(ring, "y^3", "x^2*y")],
    }
    for (a, va), (b, vb) in product(samples.items(), repeat=2):
        for u in va:
            for v in vb:
                w = u.bracket(v)
                assert w.is_zero or w.order() >= a + b - 1
