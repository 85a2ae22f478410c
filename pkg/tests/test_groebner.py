import math
from fractions import Fraction as F
from itertools import combinations

import pytest

from loglie.errors import NotGradedError
from loglie.groebner import (GREVLEX, MonomialOrder, VecPoly, buchberger,
                             detect_grading, ideal_dimension,
                             minimal_generators, module_membership,
                             normal_form, syzygies)
from loglie.polyalg import Ring

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))
R4 = Ring(("x", "y", "z", "w"))


def wrap(*polys):
    return [VecPoly.wrap(p) for p in polys]


def re_expand(cofs, gens):
    ring = gens[0].ring
    acc = VecPoly(ring.zero for _ in range(gens[0].rank))
    for c, g in zip(cofs, gens):
        acc = acc + g.poly_mul(c)
    return acc


# -- buchberger ----------------------------------------------------------------

def test_basis_of_coordinate_ideal():
    x, y = R2.gens()
    gb = buchberger(wrap(x, y))
    leads = sorted(str(e) for e in gb.elements)
    assert leads == ["(x)", "(y)"]
    gb.verify_cofactors()


def test_basis_generates_same_ideal():
    x, y = R2.gens()
    gens = wrap(x**2 - y, x**3)
    gb = buchberger(gens)
    gb.verify_cofactors()
    # both directions of generation
    for g in gens:
        rem, _ = normal_form(g, gb)
        assert rem.is_zero
    for e in gb.elements:
        assert module_membership(e, gens) is not None


def test_single_generator_module():
    x, y = R2.gens()
    gen = VecPoly((x, y))
    gb = buchberger([gen])
    assert gb.elements == [gen]


# -- normal form ----------------------------------------------------------------

def test_normal_form_membership_and_unit():
    x, y = R2.gens()
    gb = buchberger(wrap(x, y))
    rem, cofs = normal_form(VecPoly.wrap(x**2 + x * y), gb)
    assert rem.is_zero
    assert re_expand(cofs, gb.elements) == VecPoly.wrap(x**2 + x * y)
    rem, _ = normal_form(VecPoly.wrap(R2.one), gb)
    assert rem == VecPoly.wrap(R2.one)


def test_normal_form_two_steps():
    x, y = R2.gens()
    gb = buchberger(wrap(x**2 - y))
    rem, cofs = normal_form(VecPoly.wrap(x**2 * y), gb)
    assert rem == VecPoly.wrap(y**2)
    assert re_expand(cofs, gb.elements) + rem == VecPoly.wrap(x**2 * y)


# -- syzygies -------------------------------------------------------------------

def test_koszul_syzygy():
    x, y = R2.gens()
    syz = syzygies(wrap(x, y))
    assert len(syz) == 1
    s = syz[0]
    assert s.comps[0] * x + s.comps[1] * y == R2.zero


def test_syzygies_re_expand_to_zero():
    x, y, z = R3.gens()
    gens = wrap(x * y - z**2, y**2 - x * z, x**2 - y * z)
    syz = syzygies(gens)
    assert syz
    for s in syz:
        assert re_expand(list(s.comps), gens).is_zero


def test_single_generator_torsion_free():
    x, y = R2.gens()
    assert syzygies(wrap(x**2 + x * y)) == []


# -- membership -----------------------------------------------------------------

def test_membership_positive_negative():
    x, y = R2.gens()
    cof = module_membership(VecPoly.wrap(x**2 + x * y), wrap(x))
    assert cof == [x + y]
    assert module_membership(VecPoly.wrap(y), wrap(x)) is None


# -- minimal generators -----------------------------------------------------------

def test_minimal_generators_nakayama():
    x, y = R2.gens()
    g = x + y**2
    result = minimal_generators([VecPoly.wrap(x * g), VecPoly.wrap(g)])
    assert result.kept == [1]
    expr = result.discarded[0]
    assert expr[1] == x


def test_minimal_generators_diagonal_fields():
    x, y = R2.gens()
    g1, g2 = VecPoly((x, R2.zero)), VecPoly((R2.zero, y))
    g3 = VecPoly((x, y))
    result = minimal_generators([g1, g2, g3])
    assert result.kept == [0, 1]
    # the module generated is unchanged: membership both ways
    kept = result.elements
    assert module_membership(g3, kept) is not None


def test_minimal_generators_requires_grading():
    x, y = R2.gens()
    # x + y^2 cannot be homogeneous for positive weights along with x*y
    with pytest.raises(NotGradedError):
        minimal_generators([VecPoly.wrap(x + y**2), VecPoly.wrap(x * y)],
                           grading=detect_grading([VecPoly.wrap(x)]))
    assert detect_grading([VecPoly.wrap(x + y**2), VecPoly.wrap(x**2 + y**4)]) is not None
    assert detect_grading([VecPoly.wrap(x + y**2 + y**3)]) is None


def test_minimal_generators_rejects_units():
    x, y = R2.gens()
    with pytest.raises(ValueError):
        minimal_generators([VecPoly.wrap(x + 1)])


# -- ideal dimension ---------------------------------------------------------------

def brute_force_dimension(gens):
    """Independent-set dimension through elimination orders."""
    ring = gens[0].ring
    n = ring.nvars
    # unit ideal: no subset works, not even the empty one
    gb = buchberger([VecPoly.wrap(p) for p in gens])
    for e in gb.elements:
        (mono, _), _ = e.leading(GREVLEX)
        if not any(mono):
            return -math.inf
    best = -math.inf
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            outside = frozenset(i for i in range(n) if i not in subset)
            order = MonomialOrder(elim=outside) if outside else GREVLEX
            gbe = buchberger([VecPoly.wrap(p) for p in gens], order)
            intersection = [
                e for e in gbe.elements
                if all(all(m[i] == 0 for i in outside) for (m, _), _ in e.terms())]
            if not intersection:
                return size
    return best


IDEALS = [
    lambda: [R3.var(0), R3.var(1)],
    lambda: [R3.parse("x^2 - y"), R3.parse("x*z")],
    lambda: [R3.parse("x*y*z")],
    lambda: [R3.parse("x^2 + y^2 + z^2"), R3.parse("x*y")],
    lambda: [R2.parse("x^3 + y^4"), R2.parse("3*x^2"), R2.parse("4*y^3")],
    lambda: [R4.parse("z^2 - 3*y*w"), R4.parse("y*z - 9*x*w"), R4.parse("y^2 - 3*x*z")],
]


@pytest.mark.parametrize("make", IDEALS)
def test_ideal_dimension_matches_brute_force(make):
    gens = make()
    assert ideal_dimension(gens) == brute_force_dimension(gens)


def test_ideal_dimension_examples():
    assert ideal_dimension([R3.var(0), R3.var(1)]) == 1
    assert ideal_dimension([R3.one]) == -math.inf
    eq9 = [R4.parse("z^2 - 3*y*w"), R4.parse("y*z - 9*x*w"), R4.parse("y^2 - 3*x*z")]
    assert ideal_dimension(eq9) == 2
