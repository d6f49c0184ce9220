from fractions import Fraction

import pytest

from qovar.normalforms import (
    NAMES,
    evaluate_by_recipe,
    evaluate_covariant,
    normal_form,
    set_parameters,
    state,
    vandermonde_sq,
)
from qovar.poly import Poly, parse


def test_nine_families():
    assert len(NAMES) == 9
    with pytest.raises(KeyError):
        normal_form("L_nope")


def test_nilpotent_state():
    assert state("L_0_3+1bar_0_3+1bar") == parse("x1*y1*z1*t1 + x1*y2*z2*t2")


def test_generic_state_has_four_amplitudes():
    g = state("G_abcd")
    assert len(g) == 16
    assert set_parameters(g, {"a": 1, "b": 0, "c": 0, "d": 1}) == parse("x1*y1*z1*t1 + x2*y2*z2*t2")


@pytest.mark.parametrize("form", NAMES)
def test_two_evaluation_routes_agree(form, small_catalog):
    for sym in ("B_0000", "C_3111", "D^1_0000", "D_2200"):
        assert evaluate_covariant(sym, form, small_catalog) == evaluate_by_recipe(sym, form)


def test_vandermonde():
    v = vandermonde_sq((1, 2, 3, 4))
    assert v == Poly.const(3 * 8 * 15 * 5 * 12 * 7)
    assert set_parameters(vandermonde_sq(), {"a": 1, "b": 1, "c": Fraction(1, 2), "d": 3}) == Poly.zero()
