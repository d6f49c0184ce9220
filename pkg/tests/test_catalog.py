from fractions import Fraction

import pytest

from qovar.catalog import (
    ALL_SYMBOLS,
    GROUND,
    CovariantSymbol,
    build_catalog,
    canonical_symbol,
    expected_counts,
    generator_counts,
    load_cache,
    recipes,
    source,
    table_entry,
)
from qovar.poly import multidegree, parse


def test_symbol_spellings():
    for text in ("D^1_2220", "D_2220^1", "D_{2220}^{1}"):
        s = CovariantSymbol.parse(text)
        assert str(s) == "D^1_2220"
        assert s.degree == 4 and s.mu == (2, 2, 2, 0) and s.type == "2220"
    assert canonical_symbol("b_xy") == "b_xy"


@pytest.mark.parametrize("bad", ["D^1_222", "M_1111", "D^1_2220^2", "C1_1111"])
def test_bad_symbols(bad):
    with pytest.raises(ValueError):
        CovariantSymbol.parse(bad)


def test_recipe_list():
    rs = recipes()
    assert len(rs) == 169
    assert len(set(ALL_SYMBOLS)) == 170 and ALL_SYMBOLS[0] == GROUND
    for r in rs:
        assert r.right.degree == r.symbol.degree - 1
        assert r.expected_mu == r.symbol.mu


def test_count_table():
    assert sum(expected_counts().values()) == 170
    assert table_entry(4, (0, 0, 0, 0)) == 2
    assert table_entry(3, (3, 1, 1, 1)) == table_entry(3, (1, 1, 3, 1)) == 1


def test_small_catalog(small_catalog):
    for s, p in small_catalog.items():
        cs = CovariantSymbol.parse(s)
        md = multidegree(p)
        assert p and (md.d, md.mu) == (cs.degree, cs.mu)
    have = generator_counts(small_catalog)
    want = {k: v for k, v in expected_counts().items() if k[0] <= 6}
    assert have == want


def test_aliases(small_catalog):
    assert small_catalog["H"] == small_catalog["B_0000"].scale(Fraction(1, 2))
    assert small_catalog["f"] == small_catalog[GROUND]


def test_source_of_ground_form(small_catalog):
    assert source(small_catalog[GROUND]) == parse("a[0000]")


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.delenv("QOVAR_CACHE", raising=False)
    built = build_catalog(4, cache=tmp_path)
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "degree-1.cov",
        "degree-2.cov",
        "degree-3.cov",
        "degree-4.cov",
        "index.txt",
    ]
    lazy = load_cache(tmp_path)
    assert lazy.symbols() == built.symbols()
    for s in built.symbols():
        assert lazy[s] == built[s]
    before = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
    build_catalog(4, cache=tmp_path)
    assert {p.name: p.read_bytes() for p in tmp_path.iterdir()} == before


def test_corrupt_cache_entry(tmp_path, monkeypatch):
    monkeypatch.delenv("QOVAR_CACHE", raising=False)
    build_catalog(2, cache=tmp_path)
    path = tmp_path / "degree-2.cov"
    lines = path.read_text().splitlines()
    del lines[2]
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValueError):
        load_cache(tmp_path)["B_0000"]


def test_missing_cache_is_empty(tmp_path):
    assert len(load_cache(tmp_path / "nowhere")) == 0
