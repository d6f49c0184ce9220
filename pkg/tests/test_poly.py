from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qovar.algebra import I, R
from qovar.poly import (
    INHOMOGENEOUS,
    DivisionError,
    Poly,
    a_degree,
    exact_divide,
    ground_form,
    monomial,
    multidegree,
    parse,
    partial_derivative,
    render,
    substitute,
)

VARS = ["x1", "x2", "y1", "t2", "a[0000]", "a[1011]", "a"]
coeffs = st.one_of(
    st.integers(-50, 50),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    st.sampled_from([I, R, 2 - 3 * I * R]),
)
monos = st.dictionaries(st.sampled_from(VARS), st.integers(1, 3), max_size=4)
polys = st.lists(st.tuples(monos, coeffs), max_size=6).map(
    lambda ts: sum((Poly.mono(m, c) for m, c in ts), Poly.zero())
)


@given(polys)
def test_render_parse_round_trip(p):
    assert parse(render(p)) == p


@given(polys, polys, polys)
@settings(max_examples=50)
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == Poly.zero()


@given(polys, polys)
@settings(max_examples=50)
def test_leibniz(p, q):
    d = lambda u: partial_derivative(u, "x1")
    assert d(p * q) == d(p) * q + p * d(q)


@given(polys, polys)
@settings(max_examples=50)
def test_exact_division_recovers_factor(p, q):
    if not q:
        return
    assert exact_divide(p * q, q) == p


def test_division_error():
    with pytest.raises(DivisionError):
        exact_divide(Poly.var("x1") + 1, Poly.var("x2"))


def test_render_format():
    p = parse("3*x1^2*y1 - 1/2*a[0011] + (1 + 2*I)*t2")
    assert render(p) == "3*x1^2*y1 + (1 + 2*I)*t2 - 1/2*a[0011]"
    assert render(Poly.zero()) == "0"
    assert parse("x1*y2 - z1") == Poly.mono("x1*y2") - Poly.var("z1")


@pytest.mark.parametrize("bad", ["x3", "3*q1", "x1^300", "x1^200*x1^100", "2*x1 + 2*x1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_substitute():
    p = parse("x1^2*y1 + x2")
    got = substitute(p, {"x1": Poly.var("t1") + 1, "x2": Poly.const(Fraction(1, 3))})
    assert got == parse("t1^2*y1 + 2*t1*y1 + y1 + 1/3")


def test_ground_form_multidegree():
    f = ground_form()
    assert len(f) == 16
    md = multidegree(f)
    assert (md.d, md.mu) == (1, (1, 1, 1, 1))
    assert a_degree(f * f) == 2
    assert multidegree(f + Poly.var("x1")) == INHOMOGENEOUS


def test_monomial_packing():
    assert monomial("x1*x1") == monomial({"x1": 2}) == monomial(x1=2)
