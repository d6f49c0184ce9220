"""The fundamental covariants, built from their transvectant recipes.

A :class:`Catalog` maps symbols such as ``"D^1_2220"`` to polynomials.
The ground form ``A_1111`` is always present; every other entry is
``(f, right)^index`` for a right operand of strictly smaller degree.

Cache layout (a directory)::

    degree-<d>.cov   one block per covariant: a header line
                     ``SYMBOL d mu1 mu2 mu3 mu4 nterms`` followed by the
                     canonical rendering, one term per line
    index.txt        ``SYMBOL degree-<d>.cov byte-offset`` per covariant
"""

from __future__ import annotations

import logging
import os
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .poly import INHOMOGENEOUS, Poly, coefficient_extract, ground_form, monomial, multidegree, parse, render
from .recipes import GENERATOR_TABLE, RECIPES, TYPE_MULTIPLICITY
from .transvect import transvectant

log = logging.getLogger(__name__)

LETTERS = "ABCDEFGHIJKL"
GROUND = "A_1111"

_SYMBOL_RE = re.compile(r"^([A-L])(?:\^(\d+))?_\{?(\d{4})\}?(?:\^\{?(\d+)\}?)?$")


@dataclass(frozen=True, order=True)
class CovariantSymbol:
    letter: str
    subscripts: tuple
    tag: int | None = None

    @classmethod
    def parse(cls, text: str) -> "CovariantSymbol":
        """Accepts ``D^1_2220``, ``D_2220^1`` and ``D_{2220}^{1}``."""
        m = _SYMBOL_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a covariant symbol: {text!r}")
        letter, tag1, subs, tag2 = m.groups()
        if tag1 and tag2:
            raise ValueError(f"two tags in {text!r}")
        tag = tag1 or tag2
        return cls(letter, tuple(int(ch) for ch in subs), int(tag) if tag else None)

    @property
    def degree(self) -> int:
        return LETTERS.index(self.letter) + 1

    @property
    def mu(self) -> tuple:
        return self.subscripts

    @property
    def type(self) -> str:
        """Sorted variable-degree type, written largest first (``'3111'``)."""
        return "".join(str(v) for v in sorted(self.subscripts, reverse=True))

    def __str__(self):
        subs = "".join(map(str, self.subscripts))
        if self.tag is None:
            return f"{self.letter}_{subs}"
        return f"{self.letter}^{self.tag}_{subs}"


@dataclass(frozen=True)
class CovariantRecipe:
    symbol: CovariantSymbol
    left: CovariantSymbol
    right: CovariantSymbol
    index: tuple

    @property
    def expected_mu(self) -> tuple:
        return tuple(1 + r - 2 * e for r, e in zip(self.right.mu, self.index))

    def __str__(self):
        return f"{self.symbol} = (f, {self.right})^{''.join(map(str, self.index))}"


def recipes() -> list[CovariantRecipe]:
    left = CovariantSymbol.parse(GROUND)
    return [
        CovariantRecipe(
            CovariantSymbol.parse(sym), left, CovariantSymbol.parse(right), tuple(int(c) for c in e)
        )
        for sym, right, e in RECIPES
    ]


RECIPE_BY_SYMBOL = {str(r.symbol): r for r in recipes()}
ALL_SYMBOLS = [GROUND] + [str(r.symbol) for r in recipes()]

# named combinations: name -> (scale, symbol)
ALIASES = {
    "f": (Fraction(1), "A_1111"),
    "H": (Fraction(1, 2), "B_0000"),
    "b_xy": (Fraction(1, 2), "B_2200"),
    "b_xz": (Fraction(1, 2), "B_2020"),
    "b_xt": (Fraction(1, 2), "B_2002"),
    "b_yz": (Fraction(1, 2), "B_0220"),
    "b_yt": (Fraction(1, 2), "B_0202"),
    "b_zt": (Fraction(1, 2), "B_0022"),
}


def named_aliases() -> dict:
    """``{alias: (scale, symbol)}``; e.g. ``H = 1/2 B_0000``."""
    return dict(ALIASES)


def canonical_symbol(name: str) -> str:
    """Normalise user spellings (``C1_1111`` is not accepted; use ``C^1_1111``)."""
    if name in ALIASES:
        return name
    return str(CovariantSymbol.parse(name))


class RecipeError(RuntimeError):
    """A recipe produced zero or a polynomial of the wrong multidegree."""


class Catalog:
    """Symbol -> polynomial, plus the recipe that produced each entry.

    Entries may be held in memory or loaded lazily from a cache directory.
    """

    def __init__(self, entries=None, provenance=None, cache=None, index=None):
        self._entries: dict = dict(entries or {})
        self.provenance: dict = dict(provenance or {})
        self._cache = Path(cache) if cache else None
        self._index: dict = dict(index or {})

    def __contains__(self, name):
        try:
            name = canonical_symbol(name)
        except ValueError:
            return False
        if name in ALIASES:
            return ALIASES[name][1] in self
        return name in self._entries or name in self._index

    def __getitem__(self, name) -> Poly:
        return self.get(name)

    def get(self, name, keep: bool = True) -> Poly:
        """Entry by symbol; ``keep=False`` leaves a lazily read entry uncached."""
        name = canonical_symbol(name)
        if name in ALIASES:
            scale, sym = ALIASES[name]
            return self.get(sym, keep).scale(scale)
        p = self._entries.get(name)
        if p is not None:
            return p
        if name in self._index:
            p = _read_entry(self._cache, *self._index[name])[1]
            if keep:
                self._entries[name] = p
            return p
        raise KeyError(f"unknown or unbuilt covariant {name!r}")

    def symbols(self) -> list:
        have = set(self._entries) | set(self._index)
        return [s for s in ALL_SYMBOLS if s in have]

    def __len__(self):
        return len(self.symbols())

    def items(self):
        for s in self.symbols():
            yield s, self[s]

    @property
    def dmax(self) -> int:
        return max(CovariantSymbol.parse(s).degree for s in self.symbols())

    def generators_at(self, d: int, mu) -> list:
        mu = tuple(mu)
        out = []
        for s in self.symbols():
            cs = CovariantSymbol.parse(s)
            if cs.degree == d and cs.mu == mu:
                out.append(s)
        return out

    def generators(self) -> list:
        """Symbols beyond the ground form."""
        return [s for s in self.symbols() if s != GROUND]


def source(p: Poly) -> Poly:
    """Coefficient of ``x1^mu1 y1^mu2 z1^mu3 t1^mu4`` (the highest-weight part)."""
    md = multidegree(p)
    if md == INHOMOGENEOUS:
        raise ValueError("source() needs a multihomogeneous polynomial")
    mu = md.mu
    return coefficient_extract(p, monomial({"x1": mu[0], "y1": mu[1], "z1": mu[2], "t1": mu[3]}))


def check_recipe(recipe: CovariantRecipe, p: Poly) -> None:
    if not p:
        raise RecipeError(f"recipe {recipe} produced the zero polynomial")
    md = multidegree(p)
    want = (recipe.symbol.degree, recipe.symbol.mu)
    if md == INHOMOGENEOUS or (md.d, md.mu) != want:
        raise RecipeError(f"recipe {recipe} produced multidegree {md}, expected {want}")


def run_recipe(recipe: CovariantRecipe, f: Poly, right: Poly) -> Poly:
    p = transvectant(f, right, recipe.index)
    check_recipe(recipe, p)
    return p


# parallel workers inherit the operands through fork
_WORK: dict = {}


def _worker(sym: str):
    r = RECIPE_BY_SYMBOL[sym]
    p = run_recipe(r, _WORK[GROUND], _WORK[str(r.right)])
    return sym, p.terms


def build_catalog(dmax: int = 12, cache=None, jobs: int = 1) -> Catalog:
    """Compute every recipe with degree ``<= dmax`` in dependency order.

    With ``cache``, entries already on disk are reused and new ones are
    written back.  ``jobs > 1`` computes each degree layer in a process
    pool.
    """
    if not 1 <= dmax <= 12:
        raise ValueError("dmax must be between 1 and 12")
    if cache is None and os.environ.get("QOVAR_CACHE"):
        cache = os.environ["QOVAR_CACHE"]
    cached = load_cache(cache) if cache else Catalog()
    entries = {GROUND: ground_form()}
    provenance = {}
    wrote = False
    for d in range(2, dmax + 1):
        layer = [r for r in recipes() if r.symbol.degree == d]
        todo = []
        for r in layer:
            sym = str(r.symbol)
            provenance[sym] = r
            if sym in cached:
                p = cached[sym]
                check_recipe(r, p)
                entries[sym] = p
            else:
                todo.append(r)
        if todo:
            log.info("degree %d: computing %d covariants", d, len(todo))
            for sym, p in _compute_layer(todo, entries, jobs):
                entries[sym] = p
            if cache:
                write_degree(cache, d, [(str(r.symbol), entries[str(r.symbol)]) for r in layer])
                wrote = True
    if cache and (wrote or GROUND not in cached):
        write_degree(cache, 1, [(GROUND, entries[GROUND])])
        write_index(cache)
    return Catalog(entries, provenance)


def _compute_layer(todo, entries, jobs):
    f = entries[GROUND]
    if jobs <= 1 or len(todo) == 1:
        for r in todo:
            yield str(r.symbol), run_recipe(r, f, entries[str(r.right)])
        return
    import multiprocessing as mp
    from concurrent.futures import ProcessPoolExecutor

    _WORK.clear()
    _WORK[GROUND] = f
    for r in todo:
        _WORK[str(r.right)] = entries[str(r.right)]
    ctx = mp.get_context("fork")
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
        results = dict(pool.map(_worker, [str(r.symbol) for r in todo]))
    _WORK.clear()
    for r in todo:
        sym = str(r.symbol)
        p = Poly._make(results[sym])
        check_recipe(r, p)
        yield sym, p


# cache files


def _block(sym: str, p: Poly) -> str:
    md = multidegree(p)
    header = f"{sym} {md.d} {' '.join(map(str, md.mu))} {len(p)}"
    body = render(p).replace(" + ", "\n+ ").replace(" - ", "\n- ")
    return header + "\n" + body + "\n"


def write_degree(cache, d: int, items) -> Path:
    path = Path(cache)
    path.mkdir(parents=True, exist_ok=True)
    target = path / f"degree-{d}.cov"
    tmp = target.with_suffix(".tmp")
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        for sym, p in items:
            fh.write(_block(sym, p))
    os.replace(tmp, target)
    return target


def write_index(cache) -> Path:
    path = Path(cache)
    lines = []
    for d in range(1, 13):
        fn = path / f"degree-{d}.cov"
        if not fn.exists():
            continue
        offset = 0
        with open(fn, "rb") as fh:
            for raw in fh:
                if raw[:1] not in (b"+", b"-") and b" " in raw and _SYMBOL_RE.match(raw.split(b" ", 1)[0].decode()):
                    lines.append(f"{raw.split(b' ', 1)[0].decode()} {fn.name} {offset}")
                offset += len(raw)
    target = path / "index.txt"
    target.write_text("\n".join(lines) + "\n", encoding="ascii")
    return target


def _read_entry(cache: Path, filename: str, offset: int):
    with open(cache / filename, "r", encoding="ascii") as fh:
        fh.seek(offset)
        header = fh.readline().split()
        sym, nterms = header[0], int(header[6])
        lines = [fh.readline().rstrip("\n") for _ in range(nterms)] if nterms else [fh.readline().rstrip("\n")]
    p = parse(" ".join(lines))
    if len(p) != nterms:
        raise ValueError(f"cache entry {sym} is corrupt: expected {nterms} terms, read {len(p)}")
    return sym, p


def load_cache(cache) -> Catalog:
    """Open a cache directory lazily; missing directories give an empty catalog."""
    path = Path(cache)
    idx = path / "index.txt"
    if not idx.exists():
        return Catalog()
    index = {}
    for line in idx.read_text(encoding="ascii").splitlines():
        if line.strip():
            sym, fn, off = line.split()
            index[sym] = (fn, int(off))
    return Catalog(cache=path, index=index, provenance={s: RECIPE_BY_SYMBOL[s] for s in index if s in RECIPE_BY_SYMBOL})


def open_catalog(dmax: int = 12, cache=None, jobs: int = 1) -> Catalog:
    """A catalog covering ``dmax``: lazily from a complete cache, else built."""
    if cache is None and os.environ.get("QOVAR_CACHE"):
        cache = os.environ["QOVAR_CACHE"]
    if cache:
        cat = load_cache(cache)
        need = [s for s in ALL_SYMBOLS if CovariantSymbol.parse(s).degree <= dmax]
        if all(s in cat for s in need):
            return cat
    return build_catalog(dmax, cache=cache, jobs=jobs)


# counts


def generator_counts(catalog: Catalog) -> dict:
    """``{(d, type): number of generators}`` summed over permutations."""
    return dict(Counter((CovariantSymbol.parse(s).degree, CovariantSymbol.parse(s).type) for s in catalog.symbols()))


def expected_counts() -> dict:
    return {
        (d, lam): n * TYPE_MULTIPLICITY[lam] for lam, row in GENERATOR_TABLE.items() for d, n in row.items()
    }


def table_entry(d: int, mu) -> int:
    """Generators per permutation at ``(d, mu)`` according to the count table."""
    lam = "".join(str(v) for v in sorted(mu, reverse=True))
    return GENERATOR_TABLE.get(lam, {}).get(d, 0)
