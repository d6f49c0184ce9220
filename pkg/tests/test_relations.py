from fractions import Fraction

import pytest

from qovar.relations import (
    CONTROL,
    DERIVED_SYZYGIES,
    PRINTED_SYZYGIES,
    Formal,
    expand,
    identify_sources,
    rationalize,
    sources_table,
    syzygy,
    verify_syzygy,
)
from qovar.catalog import source
from qovar.poly import Poly, parse

n = Formal.name


def test_formal_arithmetic():
    x = n("f") * n("H") + 2 * n("H") * n("f")
    assert x == Formal({("H", "f"): 3})
    assert (n("f") - n("f")) == Formal()
    assert (n("f") + 1) ** 2 == n("f") * n("f") + n("f") * 2 + 1
    assert x.names() == {"f", "H"}
    assert 1 - n("f") == -(n("f") - 1)
    assert str(n("f") ** 2 * Fraction(-1, 2) + n("H")) == "-1/2*f^2 + H"


def test_expand(small_catalog):
    e = n("f") * n("f") - n("H") * 3
    assert expand(e, small_catalog) == small_catalog["f"] ** 2 - small_catalog["H"].scale(3)
    assert expand(e, small_catalog, via_source=True) == source(small_catalog["f"]) ** 2 - source(
        small_catalog["H"]
    ).scale(3)


def test_sources_table_shape():
    t = sources_table()
    assert t["0000"] == Poly.const(1)
    for lab in ("1000", "0100", "0010", "0001"):
        assert not t[lab]
    assert t["0011"] == parse("a[0000]*a[0011] - 1*a[0001]*a[0010]")


def test_identified_sources(small_catalog):
    found = identify_sources(small_catalog)
    assert found["0011"] == n("b_xy")
    assert found["0111"] == n("C_3111") * Fraction(1, 2)
    assert found["1111"] == n("H") * n("f") ** 2 - n("b_xy") * n("b_zt") - n("b_xz") * n("b_yt") - n("b_xt") * n(
        "b_yz"
    )


def test_rationalize(small_catalog):
    num, fp = rationalize("B_2200", small_catalog)
    assert (num, fp) == (n("b_xy") * 2, 0)
    num, fp = rationalize("D_4000", small_catalog)
    assert fp == 2
    assert num == -(n("C_3111") ** 2) - n("b_xy") * n("b_xz") * n("b_xt") * 16


@pytest.mark.parametrize("s", DERIVED_SYZYGIES, ids=lambda s: s.description)
def test_derived_syzygies_hold(s, small_catalog):
    assert verify_syzygy(s, small_catalog)
    assert verify_syzygy(s, small_catalog, via_source=True)


@pytest.mark.parametrize("s", PRINTED_SYZYGIES, ids=lambda s: s.description)
def test_printed_syzygies_do_not_hold_unnormalised(s, small_catalog):
    assert not verify_syzygy(s, small_catalog)


def test_control_fails(small_catalog):
    assert not verify_syzygy(CONTROL, small_catalog)


def test_unknown_name(small_catalog):
    with pytest.raises(KeyError):
        verify_syzygy(syzygy("bad", (1, "Z_9999")), small_catalog)
