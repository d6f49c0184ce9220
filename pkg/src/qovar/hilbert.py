"""Hilbert series of the covariant algebra.

``S = prod_i (1 - u_i^-2) prod_{alpha in {-1,1}^4} (1 - u^alpha t)^-1`` and
``h = L S`` where ``L`` drops every monomial with a negative u-exponent.

The coefficient of ``t^d`` in the product of the 16 geometric series is the
character of ``S^d`` of the 16-dimensional representation.  Its u-exponents
all share the parity of ``d`` and lie in ``[-d, d]``, so it is stored as a
dense array of shape ``(d+1,)*4`` indexed by ``j = (e + d) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb

import numpy as np

WEIGHTS = tuple(product((-1, 1), repeat=4))


class LaurentPoly:
    """Finitely supported Laurent polynomial in ``u1..u4`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(k): int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def from_array(cls, arr: np.ndarray, d: int) -> "LaurentPoly":
        out = {}
        for idx in zip(*np.nonzero(arr)):
            out[tuple(2 * int(j) - d for j in idx)] = int(arr[idx])
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    def coefficient(self, mu) -> int:
        return self.terms.get(tuple(mu), 0)

    def evaluate(self, u=(1, 1, 1, 1)) -> int:
        total = 0
        for k, c in self.terms.items():
            term = c
            for ui, e in zip(u, k):
                term *= ui**e if e >= 0 else 1 / ui ** (-e)
            total += term
        return total

    def invert(self, i: int) -> "LaurentPoly":
        """Substitute ``u_i -> 1/u_i``."""
        out = {}
        for k, c in self.terms.items():
            k = list(k)
            k[i] = -k[i]
            out[tuple(k)] = c
        return LaurentPoly(out)

    def truncate(self) -> "LaurentPoly":
        """The operator ``L``: keep monomials with all exponents >= 0."""
        return LaurentPoly({k: c for k, c in self.terms.items() if min(k) >= 0})

    def __repr__(self):
        return f"LaurentPoly({len(self.terms)} terms)"


@dataclass
class SeriesTable:
    """Coefficients of ``t^0 .. t^tmax`` of the 16-fold geometric product."""

    tmax: int
    arrays: list  # arrays[d] has shape (d+1,)*4

    def character(self, d: int) -> LaurentPoly:
        return LaurentPoly.from_array(self.arrays[d], d)


def _place(src: np.ndarray, alpha) -> np.ndarray:
    """Multiply a degree ``d-1`` array by ``u^alpha``, landing in degree ``d``."""
    n = src.shape[0] + 1
    out = np.zeros((n,) * 4, dtype=object if src.dtype == object else np.int64)
    sl = tuple(slice(1, n) if a > 0 else slice(0, n - 1) for a in alpha)
    out[sl] = src
    return out


_TABLE: list = []  # the largest table built so far


def series_table(tmax: int) -> SeriesTable:
    """Multiply in the 16 factors ``(1 - u^alpha t)^-1`` one at a time.

    For each factor, ``G_new[d] = G[d] + u^alpha G_new[d-1]`` in increasing d.
    The result is cached and reused for any smaller ``tmax``.
    """
    if tmax < 0:
        raise ValueError("tmax must be nonnegative")
    if _TABLE and _TABLE[0].tmax >= tmax:
        return SeriesTable(tmax, _TABLE[0].arrays[: tmax + 1])
    # dim S^d of a 16-dim space bounds every coefficient
    dtype = np.int64 if comb(15 + tmax, tmax) < 2**62 else object
    arrays = [np.zeros((d + 1,) * 4, dtype=dtype) for d in range(tmax + 1)]
    arrays[0][0, 0, 0, 0] = 1
    for alpha in WEIGHTS:
        for d in range(1, tmax + 1):
            arrays[d] += _place(arrays[d - 1], alpha)
    for a in arrays:
        a.setflags(write=False)
    table = SeriesTable(tmax, arrays)
    _TABLE[:] = [table]
    return table


def character_of_symmetric_power(d: int) -> LaurentPoly:
    """Coefficient of ``t^d`` in ``prod_alpha (1 - u^alpha t)^-1``."""
    return series_table(max(d, 12)).character(d)


@lru_cache(maxsize=64)
def _multiplicity_array(d: int) -> np.ndarray:
    """``c_{d;mu}`` for ``mu_i = 2 j_i - d >= 0``, as an array over ``j``.

    ``(1 - u^-2)`` shifts the exponent by 2, i.e. the index by 1, so after
    truncation ``c[mu] = sum_S (-1)^|S| char[mu + 2 * 1_S]``.
    """
    ch = series_table(max(d, 12)).arrays[d]
    n = d + 1
    lo = (d + 1) // 2  # first index with e >= 0
    out = np.zeros((n - lo,) * 4, dtype=ch.dtype)
    padded = np.zeros((n + 1,) * 4, dtype=ch.dtype)
    padded[:n, :n, :n, :n] = ch
    for s in product((0, 1), repeat=4):
        sl = tuple(slice(lo + k, n + k) for k in s)
        sign = -1 if sum(s) % 2 else 1
        out += sign * padded[sl]
    return out


def covariant_dimension(d: int, mu) -> int:
    """``c_{d;mu}``: dimension of covariants of degree ``d`` and multidegree ``mu``."""
    mu = tuple(int(m) for m in mu)
    if len(mu) != 4 or min(mu) < 0 or d < 0:
        raise ValueError("need d >= 0 and four nonnegative exponents")
    if any((m - d) % 2 for m in mu) or max(mu) > d:
        return 0
    arr = _multiplicity_array(d)
    lo = (d + 1) // 2
    return int(arr[tuple((m + d) // 2 - lo for m in mu)])


def multiplicities(d: int) -> dict:
    """All nonzero ``c_{d;mu}`` as ``{mu: c}``."""
    arr = _multiplicity_array(d)
    lo = (d + 1) // 2
    out = {}
    for idx in zip(*np.nonzero(arr)):
        out[tuple(2 * (int(j) + lo) - d for j in idx)] = int(arr[idx])
    return out


def weyl_dimension(mu) -> int:
    out = 1
    for m in mu:
        out *= m + 1
    return out


def consistency_sum(d: int) -> int:
    """``sum_mu c_{d;mu} dim(mu)``; equals ``C(15+d, d)``."""
    return sum(c * weyl_dimension(mu) for mu, c in multiplicities(d).items())


def diagonal_series(tmax: int) -> list:
    """``[ {u-power: coefficient} for d in 0..tmax ]`` of ``h(t, u, u, u, u)``."""
    series_table(max(tmax, 12))
    out = []
    for d in range(tmax + 1):
        row: dict = {}
        for mu, c in multiplicities(d).items():
            k = sum(mu)
            row[k] = row.get(k, 0) + c
        out.append(dict(sorted(row.items())))
    return out


def invariant_series(tmax: int) -> list:
    return [covariant_dimension(d, (0, 0, 0, 0)) for d in range(tmax + 1)]


# the printed diagonal specialisation h = P/Q

# P as {t-power: {u-power: coefficient}}
PRINTED_P = {
    0: {0: 1},
    1: {2: -1},
    2: {4: 3, 2: -2},
    3: {6: 1, 4: 4},
    4: {4: 10, 2: -1},
    5: {8: -4, 6: -2, 4: 2},
    6: {10: 2, 8: 6, 6: -2, 4: 8},
    7: {10: 2, 8: 6},
    8: {12: -8, 10: 1, 8: 13, 6: -2, 4: 4},
    9: {12: -8, 10: -1, 8: 12, 6: -1},
    10: {14: 2, 12: -13, 8: 13, 6: -2},
    11: {14: 1, 12: -12, 10: 1, 8: 8},
    12: {16: -4, 14: 2, 12: -13, 10: -1, 8: 8},
    13: {12: -6, 10: -2},
    14: {16: -8, 14: 2, 12: -6, 10: -2},
    15: {16: -2, 14: 2, 12: 4},
    16: {18: 1, 16: -10},
    17: {16: -4, 14: -1},
    18: {18: 2, 16: -3},
    19: {18: 1},
    20: {20: -1},
}

# Q as a list of (t-power, u-power, multiplicity) for factors (1 - t^a u^b)^m
PRINTED_Q = (
    (1, 2, 1),
    (1, 4, 1),
    (2, 0, 1),
    (2, 2, 2),
    (2, 4, 3),
    (4, 0, 1),
    (4, 2, 1),
    (4, 4, 1),
    (6, 0, 1),
)

# The printed Q with (1 - t^4) squared.  With this denominator the printed
# P reproduces L S exactly (see verify_rational_form), and at u = 0 it gives
# 1/((1-t^2)(1-t^4)^2(1-t^6)), the invariant series.
DIAGONAL_Q = tuple((a, b, 2 if (a, b) == (4, 0) else m) for a, b, m in PRINTED_Q)


def _series_mul(a: list, b: list, tmax: int) -> list:
    out = [dict() for _ in range(tmax + 1)]
    for i, ra in enumerate(a):
        for j, rb in enumerate(b[: tmax + 1 - i]):
            row = out[i + j]
            for ka, ca in ra.items():
                for kb, cb in rb.items():
                    row[ka + kb] = row.get(ka + kb, 0) + ca * cb
    return [{k: v for k, v in sorted(r.items()) if v} for r in out]


def printed_series(tmax: int, denominator=PRINTED_Q) -> list:
    """Expand the printed ``P`` over ``denominator`` to order ``t^tmax``."""
    series = [dict(PRINTED_P.get(d, {})) for d in range(tmax + 1)]
    for a, b, m in denominator:
        geo = [dict() for _ in range(tmax + 1)]
        for k in range(0, tmax // a + 1):
            geo[k * a] = {k * b: 1}
        for _ in range(m):
            series = _series_mul(series, geo, tmax)
    return series


@dataclass(frozen=True)
class Mismatch:
    d: int
    upower: int
    expected: int  # from L S
    printed: int  # from P/Q

    def __str__(self):
        return f"t^{self.d} u^{self.upower}: LS={self.expected} P/Q={self.printed}"


def compare_with_printed_PQ(tmax: int = 12, denominator=PRINTED_Q) -> list:
    """Cells ``(d, u-power)`` where ``P/denominator`` differs from ``L S``.

    With the printed denominator the list is not empty; see DIAGONAL_Q.
    """
    ours = diagonal_series(tmax)
    theirs = printed_series(tmax, denominator)
    out = []
    for d in range(tmax + 1):
        for k in sorted(set(ours[d]) | set(theirs[d])):
            e, p = ours[d].get(k, 0), theirs[d].get(k, 0)
            if e != p:
                out.append(Mismatch(d, k, e, p))
    return out


def _one_minus_t_multiplicity(coeffs: list) -> int:
    """Order of vanishing at ``t = 1`` of ``sum coeffs[k] t^k``."""
    c = [int(v) for v in coeffs]
    mult = 0
    while any(c) and sum(c) == 0:
        # synthetic division by (t - 1)
        q = []
        acc = 0
        for v in reversed(c[1:]):
            acc += v
            q.append(acc)
        c = list(reversed(q))
        mult += 1
    return mult


def _printed_p_at_u_equals_t() -> list:
    top = max(t + u for t, row in PRINTED_P.items() for u in row)
    c = [0] * (top + 1)
    for t, row in PRINTED_P.items():
        for u, v in row.items():
            c[t + u] += v
    return c


def verify_rational_form(tmax: int = 30, denominator=DIAGONAL_Q) -> bool:
    """``denominator * L S`` equals the printed ``P`` through ``t^tmax``."""
    return not compare_with_printed_PQ(tmax, denominator)


def krull_dimension(denominator=DIAGONAL_Q) -> int:
    """Pole order at ``t = 1`` of ``P/denominator`` with ``u = t``.

    The printed P vanishes at ``t = u = 1``, so the printed Q alone gives 11;
    the default denominator is the one that matches ``L S``.
    """
    q_mult = sum(m for a, b, m in denominator)  # each 1 - t^(a+b) vanishes simply at 1
    return q_mult - _one_minus_t_multiplicity(_printed_p_at_u_equals_t())


def render_upoly(row: dict) -> str:
    if not row:
        return "0"
    parts = []
    for k, c in sorted(row.items()):
        mono = "1" if k == 0 else ("u" if k == 1 else f"u^{k}")
        if k == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)
