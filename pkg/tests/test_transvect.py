from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qovar.normalforms import evaluate_by_recipe
from qovar.poly import Poly, ground_form, multidegree, parse
from qovar.transvect import oracle_transvectant, transvectant

f = ground_form()
VARS = ["x1", "x2", "y1", "y2", "z1", "z2", "t1", "t2"]


def binary_form(coeffs, pair=("x1", "x2")):
    n = len(coeffs) - 1
    return sum(
        (Poly.mono({pair[0]: n - k, pair[1]: k}, c) for k, c in enumerate(coeffs) if c),
        Poly.zero(),
    )


small_forms = st.lists(st.integers(-4, 4), min_size=1, max_size=4)
indices = st.tuples(*[st.integers(0, 2)] * 4)


@given(st.lists(st.tuples(st.sampled_from(VARS), st.integers(-3, 3)), min_size=1, max_size=5), indices)
@settings(max_examples=60, deadline=None)
def test_closed_form_matches_oracle(terms, e):
    g = sum((Poly.mono({v: 1, "a[0101]": 1}, c) for v, c in terms), Poly.zero()) * f
    assert transvectant(f, g, e) == oracle_transvectant(f, g, e)


@given(small_forms, small_forms, st.integers(0, 3))
@settings(max_examples=60)
def test_antisymmetry(p, q, k):
    g, h = binary_form(p), binary_form(q)
    e = (k, 0, 0, 0)
    sign = -1 if k % 2 else 1
    assert transvectant(g, h, e) == transvectant(h, g, e).scale(sign)


def test_binary_quadratic_discriminant():
    # (g, g)^2 of a x1^2 + b x1 x2 + c x2^2 is 2(4ac - b^2) up to the unnormalised factor
    g = parse("a*x1^2 + b*x1*x2 + c*x2^2")
    assert transvectant(g, g, (2, 0, 0, 0)) == parse("4*a*c - 1*b^2").scale(2)


def test_odd_self_transvectants_vanish():
    for e in product(range(3), repeat=4):
        if sum(e) % 2:
            assert not transvectant(f, f, e)


def test_multidegree_of_transvectant():
    p = transvectant(f, f, (1, 1, 0, 0))
    md = multidegree(p)
    assert (md.d, md.mu) == (2, (0, 0, 2, 2))


def test_hyperdeterminant_on_generic_family():
    assert evaluate_by_recipe("H", "G_abcd") == parse("1/2*a^2 + 1/2*b^2 + 1/2*c^2 + 1/2*d^2")


def test_bad_index():
    with pytest.raises(ValueError):
        transvectant(f, f, (1, 1, 1))
    with pytest.raises(ValueError):
        transvectant(f, f, (-1, 0, 0, 0))
