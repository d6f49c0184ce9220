"""Generator counts certified by exact linear algebra.

For a cell ``(d, mu)`` the Hilbert series gives the dimension of the space of
covariants.  Products of lower-degree generators span a subspace; the
number of new generators needed is the codimension.

Ranks are computed on sources.  A covariant is determined by its source and
the source of a product is the product of the sources, so the rank of a
family of covariants equals the rank of their sources.  Sources live in the
16 coefficients only, which keeps the matrices small.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .catalog import Catalog, CovariantSymbol, source, table_entry
from .hilbert import covariant_dimension, multiplicities
from .poly import INHOMOGENEOUS, Poly, multidegree


@dataclass(frozen=True)
class RankReport:
    d: int
    mu: tuple
    dim: int
    reducible_rank: int
    new_needed: int
    new_supplied: int
    full_rank_ok: bool
    table_new: int

    @property
    def ok(self) -> bool:
        return self.full_rank_ok and self.new_needed == self.table_new

    def line(self) -> str:
        mu = "".join(str(m) for m in self.mu)
        return (
            f"{self.d} {mu} {self.dim} {self.reducible_rank} {self.new_needed} "
            f"{self.new_supplied} {'OK' if self.ok else 'FAIL'}"
        )


def _generator_data(catalog: Catalog, dmax: int) -> list:
    out = []
    for s in catalog.symbols():
        cs = CovariantSymbol.parse(s)
        if cs.degree <= dmax:
            out.append((s, cs.degree, cs.mu))
    return out


def enumerate_factorisations(d: int, mu, gens: list) -> list:
    """Multisets of generators (as sorted index tuples) with total ``(d, mu)``.

    ``gens`` is a list of ``(symbol, degree, mu)``; only factors of degree
    below ``d`` are used, so every multiset has at least two members.
    """
    mu = tuple(mu)
    usable = [i for i, (_, dg, m) in enumerate(gens) if dg < d and all(a <= b for a, b in zip(m, mu))]
    out = []

    def rec(start, dleft, muleft, chosen):
        if dleft == 0:
            if not any(muleft):
                out.append(tuple(chosen))
            return
        for pos in range(start, len(usable)):
            i = usable[pos]
            _, dg, m = gens[i]
            if dg > dleft or any(a > b for a, b in zip(m, muleft)):
                continue
            chosen.append(i)
            rec(pos, dleft - dg, tuple(b - a for a, b in zip(m, muleft)), chosen)
            chosen.pop()

    rec(0, d, mu, [])
    return out


def enumerate_products(d: int, mu, catalog: Catalog) -> list:
    """Products of generators of degree ``< d`` with multidegree ``(d, mu)``."""
    gens = _generator_data(catalog, d - 1)
    out = []
    for combo in enumerate_factorisations(d, mu, gens):
        p = Poly.const(1)
        for i in combo:
            p = p * catalog[gens[i][0]]
        out.append(p)
    return out


def product_names(d: int, mu, catalog: Catalog) -> list:
    gens = _generator_data(catalog, d - 1)
    return [tuple(gens[i][0] for i in combo) for combo in enumerate_factorisations(d, mu, gens)]


# exact rank


def _content(row: dict) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _integral_row(p: Poly) -> dict:
    """Coefficients scaled to coprime integers."""
    from fractions import Fraction

    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    row = {}
    for m, c in p.terms.items():
        if not isinstance(c, (int, Fraction)):
            raise TypeError("rank over the rationals needs rational coefficients")
        row[m] = int(c * den)
    g = _content(row)
    return {m: v // g for m, v in row.items()} if g > 1 else row


class Echelon:
    """Incremental fraction-free row echelon form over the integers."""

    def __init__(self):
        self.pivots: list = []  # (column, row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for col, prow in self.pivots:
            a = row.get(col)
            if not a:
                continue
            b = prow[col]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {m: v * fa for m, v in row.items()}
            for m, v in prow.items():
                w = new.get(m, 0) - fb * v
                if w:
                    new[m] = w
                else:
                    new.pop(m, None)
            g = _content(new)
            row = {m: v // g for m, v in new.items()} if g > 1 else new
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        col = min(row, key=lambda m: (abs(row[m]), m))
        self.pivots.append((col, row))
        return True


def _check_common_multidegree(polys) -> None:
    seen = None
    for p in polys:
        if not p:
            continue
        md = multidegree(p)
        if md == INHOMOGENEOUS:
            raise ValueError("inhomogeneous polynomial in rank computation")
        key = (md.d, md.mu)
        if seen is None:
            seen = key
        elif key != seen:
            raise ValueError(f"mixed multidegrees {seen} and {key}")


def rank_over_rationals(polys) -> int:
    polys = list(polys)
    _check_common_multidegree(polys)
    ech = Echelon()
    for p in polys:
        if p:
            ech.add(_integral_row(p))
    return ech.rank


# the table


def _source_powers(catalog: Catalog, dmax: int) -> dict:
    return {s: source(catalog[s]) for s, dg, _ in _generator_data(catalog, dmax)}


def verify_cell(d: int, mu, catalog: Catalog, sources: dict | None = None) -> RankReport:
    mu = tuple(mu)
    gens = _generator_data(catalog, d)
    sources = sources if sources is not None else _source_powers(catalog, d)
    dim = covariant_dimension(d, mu)
    ech = Echelon()
    lower = [g for g in gens if g[1] < d]
    for combo in enumerate_factorisations(d, mu, lower):
        p = Poly.const(1)
        for i in combo:
            p = p * sources[lower[i][0]]
        ech.add(_integral_row(p))
    reducible = ech.rank
    new_here = [s for s, dg, m in gens if dg == d and m == mu]
    for s in new_here:
        ech.add(_integral_row(sources[s]))
    supplied_rank = ech.rank - reducible
    return RankReport(
        d=d,
        mu=mu,
        dim=dim,
        reducible_rank=reducible,
        new_needed=dim - reducible,
        new_supplied=len(new_here),
        full_rank_ok=ech.rank == dim and supplied_rank == len(new_here),
        table_new=table_entry(d, mu),
    )


_SHARED: dict = {}


def _cell_worker(cell):
    return verify_cell(cell[0], cell[1], _SHARED["catalog"], _SHARED["sources"])


def cells(dmax: int) -> list:
    out = []
    for d in range(1, dmax + 1):
        out.extend((d, mu) for mu in sorted(multiplicities(d)))
    return out


def verify_table(dmax: int, catalog: Catalog, jobs: int = 1, progress=None) -> list:
    """One :class:`RankReport` per cell ``(d <= dmax, mu)`` with ``c_{d;mu} > 0``."""
    if dmax > catalog.dmax:
        raise ValueError(f"catalog only reaches degree {catalog.dmax}")
    sources = _source_powers(catalog, dmax)
    todo = cells(dmax)
    if jobs > 1:
        import multiprocessing as mp

        _SHARED.update(catalog=catalog, sources=sources)
        with ProcessPoolExecutor(jobs, mp_context=mp.get_context("fork")) as pool:
            reports = list(pool.map(_cell_worker, todo, chunksize=4))
        _SHARED.clear()
    else:
        reports = []
        for cell in todo:
            reports.append(verify_cell(*cell, catalog, sources))
            if progress:
                progress(reports[-1])
    return reports


def permutation_consistent(reports: list) -> bool:
    """Cells with permuted ``mu`` agree on (dim, reducible, new_needed)."""
    seen: dict = {}
    for r in reports:
        key = (r.d, tuple(sorted(r.mu)))
        val = (r.dim, r.reducible_rank, r.new_needed)
        if seen.setdefault(key, val) != val:
            return False
    return True


__all__ = [
    "Echelon",
    "RankReport",
    "cells",
    "enumerate_products",
    "permutation_consistent",
    "product_names",
    "rank_over_rationals",
    "verify_cell",
    "verify_table",
]
