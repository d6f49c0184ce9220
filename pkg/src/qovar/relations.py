"""Associated forms, rational covariants and syzygies.

The associated form ``F`` is the ground form after the substitutions
``x1 -> a0000 x1 - a1000 x2``, ``x2 -> a0000 x2`` (likewise for y, z, t with
a0100, a0010, a0001).  Its coefficients, stripped of powers of ``a0000``,
are the 16 semi-invariants ``c_alpha``; ``C_alpha`` denotes the covariant
whose source is ``c_alpha``.  Substituting ``a_alpha -> C_alpha f^(1-|alpha|)``
into the source of any covariant rewrites it as a rational function of
``f``, ``H`` and the ten nontrivial ``C_alpha`` of degree 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import ALIASES, Catalog, canonical_symbol, source
from .poly import (
    DivisionError,
    Poly,
    coeff_index,
    coefficient_extract,
    exact_divide,
    exponents,
    ground_form,
    monomial,
    substitute,
)

LABELS = tuple(f"{k:04b}" for k in range(16))
SLOT_VARS = (("x1", "x2"), ("y1", "y2"), ("z1", "z2"), ("t1", "t2"))
PAIR_NAMES = {  # label -> b_uv for the two slots carrying a 0
    "0011": "b_xy",
    "0101": "b_xz",
    "0110": "b_xt",
    "1001": "b_yz",
    "1010": "b_yt",
    "1100": "b_zt",
}
CUBIC_NAMES = {"0111": "C_3111", "1011": "C_1311", "1101": "C_1131", "1110": "C_1113"}
GENERATORS = ("f", "H") + tuple(PAIR_NAMES.values()) + tuple(CUBIC_NAMES.values())


# formal polynomials in named covariants


class Formal:
    """Rational combination of products of named covariants.

    ``terms`` maps a sorted tuple of names (with repetition) to a coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict = {}
        for k, c in (terms or {}).items():
            k = tuple(sorted(k))
            out[k] = out.get(k, 0) + Fraction(c)
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def name(cls, n: str) -> "Formal":
        return cls({(n,): 1})

    @classmethod
    def const(cls, c) -> "Formal":
        return cls({(): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Formal):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, Formal):
            other = Formal.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Formal(out)

    __radd__ = __add__

    def __neg__(self):
        return Formal({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Formal):
            return Formal({k: c * Fraction(other) for k, c in self.terms.items()})
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(sorted(k1 + k2))
                out[k] = out.get(k, 0) + c1 * c2
        return Formal(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Formal.const(1)
        for _ in range(n):
            out = out * self
        return out

    def names(self) -> set:
        return {n for k in self.terms for n in k}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (-len(k), k)):
            c = self.terms[k]
            mono = "*".join(
                n if k.count(n) == 1 else f"{n}^{k.count(n)}" for n in sorted(set(k), key=k.index)
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    __repr__ = __str__


def expand(expr: Formal, catalog: Catalog, via_source: bool = False) -> Poly:
    """Replace names by catalog polynomials (or by their sources).

    Sources are multiplicative and determine covariants, so for a covariant
    identity both routes decide zero-ness identically.
    """
    cache: dict = {}

    def get(n):
        if n not in cache:
            p = catalog[n]
            cache[n] = source(p) if via_source else p
        return cache[n]

    total = Poly.zero()
    for k, c in expr.terms.items():
        prod = Poly.const(1)
        for n in k:
            prod = prod * get(n)
        total = total + prod.scale(c)
    return total


# associated form and sources


def associated_form() -> Poly:
    a0 = Poly.var("a[0000]")
    sub = {}
    for (v1, v2), lab in zip(SLOT_VARS, ("1000", "0100", "0010", "0001")):
        sub[v1] = a0 * Poly.var(v1) - Poly.var(f"a[{lab}]") * Poly.var(v2)
        sub[v2] = a0 * Poly.var(v2)
    return substitute(ground_form(), sub)


def _ket_monomial(label: str) -> int:
    return monomial({v[int(b)]: 1 for v, b in zip(SLOT_VARS, label)})


class ConventionError(ArithmeticError):
    """A division or identification step failed."""


def _strip_a0000(p: Poly) -> tuple:
    """Divide out the largest power of ``a0000``; returns ``(quotient, power)``."""
    if not p:
        return p, None
    k = coeff_index("0000")
    power = min(exponents(m)[k] for m in p.terms)
    if power:
        p = exact_divide(p, Poly.var(k) ** power)
    return p, power


def sources_table() -> dict:
    """``{label: c_label}``, each the coefficient of the matching ket in ``F``.

    The power of ``a0000`` stripped from entry ``ijkl`` is asserted to be
    ``5 - (i+j+k+l)``.
    """
    F = associated_form()
    out = {}
    for lab in LABELS:
        q, power = _strip_a0000(coefficient_extract(F, _ket_monomial(lab)))
        if q and power != 5 - lab.count("1"):
            raise ConventionError(f"c_{lab}: stripped a0000^{power}, expected {5 - lab.count('1')}")
        out[lab] = q
    return out


def _pair_expression() -> Formal:
    """``H f^2 - b_xy b_zt - b_xz b_yt - b_xt b_yz``."""
    n = Formal.name
    return (
        n("H") * n("f") ** 2
        - n("b_xy") * n("b_zt")
        - n("b_xz") * n("b_yt")
        - n("b_xt") * n("b_yz")
    )


# as tabulated: label -> C_label in terms of the generators
PRINTED_TABLE = {
    "0000": Formal.const(1),
    "1000": Formal(),
    "0100": Formal(),
    "0010": Formal(),
    "0001": Formal(),
    **{lab: Formal.name(n) for lab, n in PAIR_NAMES.items()},
    **{lab: -Formal.name(n) for lab, n in CUBIC_NAMES.items()},
    "1111": _pair_expression(),
}


def _source_ratio(p: Poly, q: Poly):
    """``r`` with ``p == r q``, or None."""
    if not q:
        return Fraction(0) if not p else None
    if set(p.terms) != set(q.terms):
        return None
    m = next(iter(q.terms))
    r = Fraction(p.terms[m]) / Fraction(q.terms[m])
    return r if p == q.scale(r) else None


def identify_sources(catalog: Catalog, table: dict | None = None) -> dict:
    """Express each ``C_label`` through the generators, from the sources alone.

    Each ``c_label`` is matched against the source of the tabulated
    candidate; the returned value is the exact multiple that fits.
    """
    table = table or sources_table()
    out = {}
    for lab, c in table.items():
        cand = PRINTED_TABLE[lab]
        if not cand or cand == Formal.const(1):
            out[lab] = cand if c == expand(cand, catalog, via_source=True) else None
            continue
        base = Formal({k: abs(v) for k, v in cand.terms.items()}) if lab in CUBIC_NAMES else cand
        r = _source_ratio(c, expand(base, catalog, via_source=True))
        out[lab] = None if r is None else base * r
    return out


@dataclass
class SourceCheck:
    label: str
    printed: Formal
    found: Formal | None

    @property
    def ok(self) -> bool:
        return self.found is not None and self.found == self.printed


def check_sources_table(catalog: Catalog) -> list:
    found = identify_sources(catalog)
    return [SourceCheck(lab, PRINTED_TABLE[lab], found[lab]) for lab in LABELS]


# rationalisation


def rationalize(symbol: str, catalog: Catalog, images: dict | None = None) -> tuple:
    """``(numerator, fpower)`` with ``f^fpower * symbol == numerator``.

    ``images`` maps labels to the generator expressions of ``C_label``;
    by default they are identified from the catalog.
    """
    sym = canonical_symbol(symbol)
    images = images or identify_sources(catalog)
    if any(v is None for v in images.values()):
        raise ConventionError("some associated form could not be identified")
    src = source(catalog[sym])
    powers: dict = {}
    shifts = set()
    terms = []
    for m, c in src.terms.items():
        ex = exponents(m)
        shift = sum(ex[k] * (1 - LABELS[k].count("1")) for k in range(16) if ex[k])
        shifts.add(shift)
        terms.append((c, ex, shift))
    if len(shifts) != 1:
        raise ConventionError(f"source of {sym} is not weight-homogeneous")
    shift = shifts.pop()
    fpower = max(0, -shift)
    numerator = Formal()
    for c, ex, _ in terms:
        term = Formal.const(c)
        for k in range(16):
            if ex[k]:
                key = (k, ex[k])
                if key not in powers:
                    powers[key] = images[LABELS[k]] ** ex[k]
                term = term * powers[key]
                if not term:
                    break
        numerator = numerator + term
    return numerator * Formal.name("f") ** (shift + fpower), fpower


# syzygies


@dataclass
class Syzygy:
    description: str
    combination: Formal
    expected: bool = True  # whether the combination is claimed to vanish

    def __str__(self):
        return f"{self.combination} = 0"


def syzygy(description: str, *terms, expected=True) -> Syzygy:
    """Build from ``(coefficient, "name", "name", ...)`` tuples."""
    out = Formal()
    for c, *names in terms:
        out = out + Formal({tuple(names): c})
    return Syzygy(description, out, expected)


def rationalization_syzygy(symbol: str, catalog: Catalog) -> Syzygy:
    num, fp = rationalize(symbol, catalog)
    sym = canonical_symbol(symbol)
    lhs = Formal({("f",) * fp + (sym,): 1})
    return Syzygy(f"rationalization of {sym}", lhs - num)


def verify_syzygy(s: Syzygy, catalog: Catalog, via_source: bool = False) -> bool:
    for n in s.combination.names():
        if n not in catalog:
            raise KeyError(f"unknown symbol {n!r} in syzygy")
    return not expand(s.combination, catalog, via_source=via_source)


_h = Fraction(1, 2)
_3h = Fraction(3, 2)
_9h = Fraction(9, 2)
_9q = Fraction(9, 4)
_9e = Fraction(9, 8)
_3q = Fraction(3, 4)

PRINTED_SYZYGIES = (
    syzygy(
        "f^2 D_4000 + C_3111^2 + 4 b_xy b_xz b_xt",
        (1, "f", "f", "D_4000"),
        (1, "C_3111", "C_3111"),
        (4, "b_xy", "b_xz", "b_xt"),
    ),
    syzygy(
        "first degree-6 identity",
        (1, "D^2_0000", "f", "f"),
        (2, "D^1_0000", "f", "f"),
        (-_3h, "B_2200", "B_0022", "B_0000"),
        (_3h, "B_2020", "B_0202", "B_0000"),
        (-_9h, "D_2200", "B_0022"),
        (-4, "C^2_1111", "C^2_1111"),
        (-_9h, "D_0022", "B_2200"),
        (-8, "C^1_1111", "C^2_1111"),
        (_9h, "D_0220", "B_2002"),
        (_9h, "D_2002", "B_0220"),
    ),
    syzygy(
        "second degree-6 identity",
        (1, "C^1_1111", "C^1_1111"),
        (_3q, "D^1_0000", "f", "f"),
        (-_9e, "B_2200", "B_0022", "B_0000"),
        (_9e, "B_2020", "B_0202", "B_0000"),
        (-_9q, "D_2200", "B_0022"),
        (_9e, "D_0202", "B_2020"),
        (-2, "C^2_1111", "C^2_1111"),
        (-_9q, "D_0022", "B_2200"),
        # printed without superscripts; read as the mixed product
        (-2, "C^1_1111", "C^2_1111"),
        (-Fraction(3, 2), "D_2020", "B_0202"),
        (_9e, "D_0220", "B_2002"),
        (_9e, "D_2002", "B_0220"),
    ),
)

CONTROL = syzygy(
    "control: f^2 D_4000 + C_3111^2",
    (1, "f", "f", "D_4000"),
    (1, "C_3111", "C_3111"),
    expected=False,
)

# the same three relations with coefficients for the unnormalised transvectants
DERIVED_SYZYGIES = (
    syzygy(
        "f^2 D_4000 + C_3111^2 + 16 b_xy b_xz b_xt",
        (1, "f", "f", "D_4000"),
        (1, "C_3111", "C_3111"),
        (16, "b_xy", "b_xz", "b_xt"),
    ),
    syzygy(
        "first degree-6 identity, unnormalised",
        (1, "D^2_0000", "f", "f"),
        (2, "D^1_0000", "f", "f"),
        (-6, "B_2200", "B_0022", "B_0000"),
        (6, "B_2020", "B_0202", "B_0000"),
        (-3, "D_2200", "B_0022"),
        (-1, "C^2_1111", "C^2_1111"),
        (-3, "D_0022", "B_2200"),
        (-2, "C^1_1111", "C^2_1111"),
        (3, "D_0220", "B_2002"),
        (3, "D_2002", "B_0220"),
    ),
    syzygy(
        "second degree-6 identity, unnormalised",
        (1, "C^1_1111", "C^1_1111"),
        (3, "D^1_0000", "f", "f"),
        (-18, "B_2200", "B_0022", "B_0000"),
        (18, "B_2020", "B_0202", "B_0000"),
        (-6, "D_2200", "B_0022"),
        (3, "D_0202", "B_2020"),
        (-2, "C^2_1111", "C^2_1111"),
        (-6, "D_0022", "B_2200"),
        (-2, "C^1_1111", "C^2_1111"),
        (-6, "D_2020", "B_0202"),
        (3, "D_0220", "B_2002"),
        (3, "D_2002", "B_0220"),
    ),
)


# separation of the three nilpotent families

SEPARATION_FORMS = ("L_0_5+3bar", "L_0_7+1bar", "L_0_3+1bar_0_3+1bar")
SEPARATION_INVARIANTS = ("B_0000", "D^1_0000", "D^2_0000", "F_0000")
SEPARATION_EXTRA = ("C^1_1111",)  # diagnostic; has the displayed vanishing pattern
SIGNATURE = {"L_0_5+3bar": (True, False), "L_0_7+1bar": (True, True), "L_0_3+1bar_0_3+1bar": (False, False)}

# displayed values, keyed by (symbol, form)
PRINTED_VALUES = {
    ("C_3111", "L_0_5+3bar"): "2*x2*y2*z1*t1 - 2*x1*y2*z1*t1",
    ("D_2200", "L_0_5+3bar"): "0",
    ("C_3111", "L_0_7+1bar"): "2*x2*y1*z1*t2 + 2*x2*y1*z2*t1 - 4*x2*y2*z1*t1",
    ("D_2200", "L_0_7+1bar"): "-16*x2^2*z1*z2",
    ("C_3111", "L_0_3+1bar_0_3+1bar"): "0",
    ("D_2200", "L_0_3+1bar_0_3+1bar"): "0",
}


@dataclass
class SeparationRow:
    form: str
    values: dict = field(default_factory=dict)  # symbol -> Poly

    @property
    def invariants_vanish(self) -> bool:
        return all(not self.values[s] for s in SEPARATION_INVARIANTS)

    @property
    def signature(self) -> tuple:
        return (bool(self.values["C_3111"]), bool(self.values["D_2200"]))


def separation_report(catalog: Catalog) -> list:
    from .normalforms import evaluate_covariant

    rows = []
    for form in SEPARATION_FORMS:
        row = SeparationRow(form)
        for s in SEPARATION_INVARIANTS + ("C_3111", "D_2200") + SEPARATION_EXTRA:
            row.values[s] = evaluate_covariant(s, form, catalog)
        rows.append(row)
    return rows


def printed_value_checks(rows: list) -> list:
    """``[(symbol, form, printed, computed, equal)]`` for the displayed values."""
    from .poly import parse

    by_form = {r.form: r for r in rows}
    out = []
    for (sym, form), text in PRINTED_VALUES.items():
        got = by_form[form].values[sym]
        out.append((sym, form, text, got, got == parse(text)))
    return out


__all__ = [
    "ALIASES",
    "CONTROL",
    "ConventionError",
    "DERIVED_SYZYGIES",
    "DivisionError",
    "Formal",
    "GENERATORS",
    "PRINTED_SYZYGIES",
    "PRINTED_TABLE",
    "Syzygy",
    "associated_form",
    "check_sources_table",
    "expand",
    "identify_sources",
    "rationalize",
    "rationalization_syzygy",
    "separation_report",
    "sources_table",
    "syzygy",
    "verify_syzygy",
]
