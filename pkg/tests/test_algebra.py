from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qovar.algebra import FieldElem, I, R, field_inv, format_coeff, is_rational, parse_coeff, to_rational

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elems = st.builds(FieldElem, small, small, small, small)


def test_units():
    assert I * I == -1
    assert R * R == 2
    assert (I * R) * (I * R) == -2
    assert (1 + I) * (1 - I) == 2


@given(elems, elems, elems)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@given(elems)
def test_inverse(x):
    if not x:
        with pytest.raises(ZeroDivisionError):
            field_inv(x)
        return
    assert x * field_inv(x) == 1
    assert x / x == 1


@given(elems)
def test_format_parse_round_trip(x):
    c = to_rational(x)
    assert parse_coeff(format_coeff(c)) == c


def test_rational_demotion():
    assert is_rational(FieldElem(Fraction(3, 2)))
    assert to_rational(FieldElem(4)) == 4
    assert not is_rational(I)


@pytest.mark.parametrize("bad", ["", "1/0x", "(1 + 2*J)", "(1 + 1)", "(3"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_coeff(bad)
