from collections import Counter
from itertools import combinations_with_replacement, product
from math import comb

import pytest

from qovar import hilbert as hb

WEIGHTS = list(product((-1, 1), repeat=4))


def brute_character(d):
    """Weights of S^d of the 16-dimensional representation, by enumeration."""
    out = Counter()
    for combo in combinations_with_replacement(range(16), d):
        out[tuple(sum(WEIGHTS[i][s] for i in combo) for s in range(4))] += 1
    return out


def brute_dimension(d, mu):
    ch = brute_character(d)
    total = 0
    for S in product((0, 1), repeat=4):
        total += (-1) ** sum(S) * ch[tuple(m + 2 * s for m, s in zip(mu, S))]
    return total


@pytest.mark.parametrize("d", range(0, 5))
def test_dimensions_match_enumeration(d):
    for mu, c in hb.multiplicities(d).items():
        assert brute_dimension(d, mu) == c
    ch = brute_character(d)
    assert hb.character_of_symmetric_power(d).evaluate() == sum(ch.values())


def test_known_dimensions():
    assert hb.covariant_dimension(1, (1, 1, 1, 1)) == 1
    assert hb.covariant_dimension(2, (0, 0, 0, 0)) == 1
    assert hb.covariant_dimension(3, (1, 1, 1, 1)) == 3
    assert hb.covariant_dimension(4, (0, 0, 0, 0)) == 3
    assert hb.covariant_dimension(3, (2, 1, 1, 1)) == 0
    with pytest.raises(ValueError):
        hb.covariant_dimension(2, (1, 1, 1))


@pytest.mark.parametrize("d", range(0, 9))
def test_consistency_sum(d):
    assert hb.consistency_sum(d) == comb(15 + d, d)


def test_diagonal_series_head():
    rows = hb.diagonal_series(2)
    assert rows == [{0: 1}, {4: 1}, {0: 1, 4: 6, 8: 1}]


def test_invariant_series():
    assert hb.invariant_series(12) == [1, 0, 1, 0, 3, 0, 4, 0, 7, 0, 9, 0, 14]


def test_permutation_symmetry():
    m = hb.multiplicities(6)
    for mu, c in m.items():
        assert m[tuple(sorted(mu))] == c


def test_printed_rational_form():
    report = hb.compare_with_printed_PQ(8)
    assert report and str(report[0]) == "t^4 u^0: LS=3 P/Q=2"
    assert hb.verify_rational_form(30)


def test_krull_dimension():
    assert hb.krull_dimension() == 12
    assert hb.krull_dimension(hb.PRINTED_Q) == 11


def test_laurent_inversion():
    ch = hb.character_of_symmetric_power(2)
    assert ch.invert(0) == ch
