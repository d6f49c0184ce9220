"""Cayley's Omega process and multiple transvectants.

``(f, g)^e = tr Omega_x^e1 Omega_y^e2 Omega_z^e3 Omega_t^e4 f(x', ...) g(x'', ...)``
with no normalising factors.  The production route expands each
``Omega^k`` in closed form::

    sum_j (-1)^j C(k, j) (d1^(k-j) d2^j f) (d1^j d2^(k-j) g)

so no primed variables are ever created.  :func:`oracle_transvectant`
keeps the literal definition and exists for testing.
"""

from __future__ import annotations

from itertools import product
from math import comb

from .poly import BITS, MAXEXP, Poly, multi_derivative, slot_indices

__all__ = ["transvectant", "omega_power_pair", "oracle_transvectant"]


def _check_index(e) -> tuple[int, int, int, int]:
    e = tuple(int(v) for v in e)
    if len(e) != 4 or any(v < 0 for v in e):
        raise ValueError(f"transvectant index must be 4 nonnegative integers, got {e!r}")
    return e


def _mul_into(acc: dict, p: Poly, q: Poly, scale: int) -> None:
    pt, qt = p.terms, q.terms
    if len(pt) > len(qt):
        pt, qt = qt, pt
    get = acc.get
    for m1, c1 in pt.items():
        c1 = c1 * scale
        for m2, c2 in qt.items():
            k = m1 + m2
            acc[k] = get(k, 0) + c1 * c2


def _pair_sum(f: Poly, g: Poly, orders) -> Poly:
    """Sum over the closed-form expansion for ``orders = [(slot, k), ...]``."""
    orders = [(s, k) for s, k in orders if k]
    acc: dict = {}
    ranges = [range(k + 1) for _, k in orders]
    for js in product(*ranges):
        coef = 1
        df, dg = {}, {}
        for (s, k), j in zip(orders, js):
            v1, v2 = slot_indices(s)
            coef *= (-1) ** j * comb(k, j)
            df[v1], df[v2] = k - j, j
            dg[v1], dg[v2] = j, k - j
        fd = multi_derivative(f, df)
        if not fd:
            continue
        gd = multi_derivative(g, dg)
        if not gd:
            continue
        _mul_into(acc, fd, gd, coef)
    return Poly._from_accum(acc)


def omega_power_pair(f: Poly, g: Poly, slot, k: int) -> Poly:
    """``tr Omega_slot^k (f' g'')`` for a single binary variable."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return f * g
    return _pair_sum(f, g, [(slot, k)])


def transvectant(f: Poly, g: Poly, e) -> Poly:
    """Multiple transvectant ``(f, g)^e``, unnormalised."""
    e = _check_index(e)
    if not any(e):
        return f * g
    return _pair_sum(f, g, list(enumerate(e)))


# literal definition in a private extended universe

_PRIME = 28  # x'1 .. t'2 occupy indices 28..35
_DPRIME = 36  # x''1 .. t''2 occupy indices 36..43


def _relabel(p: Poly, base: int) -> dict:
    out = {}
    for m, c in p.terms.items():
        key = m & ~(((1 << (8 * BITS)) - 1) << (16 * BITS))
        for r in range(8):
            ex = (m >> (BITS * (16 + r))) & MAXEXP
            if ex:
                key += ex << (BITS * (base + r))
        out[key] = c
    return out


def _ext_derivative(terms: dict, k: int) -> dict:
    shift = BITS * k
    step = 1 << shift
    out = {}
    for m, c in terms.items():
        ex = (m >> shift) & MAXEXP
        if ex:
            out[m - step] = c * ex
    return out


def _ext_add(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _omega(terms: dict, s: int) -> dict:
    """One application of the 2x2 determinant operator on slot ``s``."""
    p1, p2 = _PRIME + 2 * s, _PRIME + 2 * s + 1
    q1, q2 = _DPRIME + 2 * s, _DPRIME + 2 * s + 1
    first = _ext_derivative(_ext_derivative(terms, p1), q2)
    second = _ext_derivative(_ext_derivative(terms, p2), q1)
    return _ext_add(first, second, -1)


def _tr(terms: dict) -> Poly:
    low = (1 << (_PRIME * BITS)) - 1
    acc: dict = {}
    for m, c in terms.items():
        key = m & low
        for r in range(8):
            ex = ((m >> (BITS * (_PRIME + r))) & MAXEXP) + ((m >> (BITS * (_DPRIME + r))) & MAXEXP)
            if ex:
                key += ex << (BITS * (16 + r))
        acc[key] = acc.get(key, 0) + c
    return Poly._from_accum(acc)


def oracle_transvectant(f: Poly, g: Poly, e) -> Poly:
    """Reference implementation: relabel, apply each Omega literally, merge."""
    e = _check_index(e)
    fp = _relabel(f, _PRIME)
    gq = _relabel(g, _DPRIME)
    terms: dict = {}
    for m1, c1 in fp.items():
        for m2, c2 in gq.items():
            k = m1 + m2
            terms[k] = terms.get(k, 0) + c1 * c2
    terms = {m: c for m, c in terms.items() if c}
    for s, k in enumerate(e):
        for _ in range(k):
            terms = _omega(terms, s)
            if not terms:
                return Poly.zero()
    return _tr(terms)
