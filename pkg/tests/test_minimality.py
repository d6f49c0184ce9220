import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qovar.minimality import (
    Echelon,
    enumerate_products,
    permutation_consistent,
    product_names,
    rank_over_rationals,
    verify_cell,
    verify_table,
)
from qovar.poly import Poly

matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols), min_size=1, max_size=7)
)


@given(matrices)
@settings(max_examples=150)
def test_echelon_rank_matches_sympy(rows):
    ech = Echelon()
    for r in rows:
        ech.add({j: v for j, v in enumerate(r) if v})
    assert ech.rank == sympy.Matrix(rows).rank()


def test_rank_of_polynomials():
    x, y = Poly.var("x1"), Poly.var("x2")
    polys = [x * x, x * y, (x + y) ** 2, x * x - y * y]
    assert rank_over_rationals(polys) == 3


def test_quartic_invariants(small_catalog):
    r = verify_cell(4, (0, 0, 0, 0), small_catalog)
    assert (r.dim, r.reducible_rank, r.new_needed, r.new_supplied) == (3, 1, 2, 2)
    assert r.ok
    assert product_names(4, (0, 0, 0, 0), small_catalog) == [("B_0000", "B_0000")]
    assert len(enumerate_products(4, (0, 0, 0, 0), small_catalog)) == 1


def test_table_to_degree_five(small_catalog):
    reports = verify_table(5, small_catalog)
    assert reports and all(r.ok for r in reports)
    assert permutation_consistent(reports)
    assert "4 0000 3 1 2 2 OK" in [r.line() for r in reports]
