import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from loglie.errors import ParseError
from loglie.polyalg import (Ring, is_reduced, order_at_origin, parse_polynomial,
                            polynomial_gcd, quasihomogeneous_weights)

R2 = Ring(("x", "y"))
R4 = Ring(("x", "y", "z", "w"))
EX7 = "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2"


def poly(text, ring=R2):
    return ring.parse(text)


# -- parsing -----------------------------------------------------------------

def test_parse_monomial_product():
    assert poly("x*y") == R2.var(0) * R2.var(1)


def test_parse_quartic_terms():
    f = R4.parse(EX7)
    assert len(f.terms) == 5
    assert f.coefficient((0, 2, 2, 0)) == 1
    assert f.coefficient((2, 0, 0, 2)) == -27


def test_parse_unclosed_parenthesis_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^2 + (3/2", ("x", "y"))
    assert err.value.position == 6


def test_parse_unknown_variable():
    with pytest.raises(ParseError):
        parse_polynomial("x + t", ("x", "y"))


def test_parse_rational_literals_and_signs():
    assert poly("-3/2*x + 1/2*x") == poly("-x")
    assert poly("2^3") == R2.const(8)


def test_parse_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        parse_polynomial("x y", ("x", "y"))


# -- ring operations ----------------------------------------------------------

def test_product_difference_of_squares():
    assert poly("(x+y)*(x-y)") == poly("x^2 - y^2")


def test_exact_division():
    assert poly("x^2*y + x*y^2").exact_div(poly("x*y")) == poly("x + y")
    assert poly("x^2 + 1").exact_div(poly("x")) is None


def test_ring_mismatch_raises():
    from loglie.errors import RingMismatchError
    with pytest.raises(RingMismatchError):
        poly("x") + Ring(("u", "v")).parse("u")


# -- derivatives, order -------------------------------------------------------

def test_partial_derivative_simple():
    assert poly("x^2*y").derivative(0) == poly("2*x*y")
    assert R2.const(5).derivative(1).is_zero


def test_partial_derivative_quartic_w():
    f = R4.parse(EX7)
    assert f.derivative("w") == R4.parse("-4*y^3 + 18*x*y*z - 54*w*x^2")


def test_order_at_origin():
    assert order_at_origin(R4.parse(EX7)) == 4
    assert order_at_origin(poly("x^2 + y^2")) == 2
    assert order_at_origin(R2.zero) == math.inf


# -- quasihomogeneity ---------------------------------------------------------

def test_qh_weights_cusp():
    qh = quasihomogeneous_weights(poly("x^3 + y^4"))
    assert qh.weights == (F(4, 3), F(1))
    assert qh.degree == 4


def test_qh_weights_homogeneous():
    qh = quasihomogeneous_weights(R4.parse(EX7))
    assert qh.weights == (F(1), F(1), F(1), F(1))


def test_qh_weights_absent():
    assert quasihomogeneous_weights(poly("x^3 + y^3 + x^2*y^2")) is None


# -- reducedness and gcd ------------------------------------------------------

def test_is_reduced_examples():
    assert not is_reduced(poly("x^2*y"))
    assert is_reduced(R4.parse("x*y*z*w"))
    assert is_reduced(R4.parse(EX7))


def test_gcd_common_factor():
    g = polynomial_gcd(poly("(x+y)^2*(x-y)"), poly("(x+y)*(x^2+1)"))
    assert g == poly("x + y")


def test_gcd_coprime():
    assert polynomial_gcd(poly("x^2 + 1"), poly("y")).is_constant()


# -- property tests -----------------------------------------------------------

coeffs = st.integers(min_value=-4, max_value=4)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, max_size=4).map(lambda d: R2.poly(d))


@given(polys, polys, polys)
def test_arithmetic_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)


@given(polys)
def test_parse_print_roundtrip(p):
    assert R2.parse(str(p)) == p


@given(polys, polys)
def test_order_multiplicative(p, q):
    assert order_at_origin(p * q) == order_at_origin(p) + order_at_origin(q)


@given(polys)
def test_qh_certificate_verifies(p):
    if p.is_zero:
        return
    qh = quasihomogeneous_weights(p)
    if qh is None:
        return
    assert min(qh.weights) == 1
    for mono in p.terms:
        assert sum(w * e for w, e in zip(qh.weights, mono)) == qh.degree


@given(polys, polys)
def test_gcd_divides_and_coprime(p, q):
    if p.is_zero or q.is_zero:
        return
    g = polynomial_gcd(p, q)
    pg = p.exact_div(g)
    qg = q.exact_div(g)
    assert pg is not None and qg is not None
    assert polynomial_gcd(pg, qg).is_constant()
