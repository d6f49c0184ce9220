"""Verification routines shared by the command line and the test-suite.

Each routine returns a list of :class:`Check` records; nothing here raises
on a mathematical failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .catalog import (
    GROUND,
    Catalog,
    CovariantSymbol,
    check_recipe,
    RECIPE_BY_SYMBOL,
    RecipeError,
    expected_counts,
    generator_counts,
)
from .poly import Poly, parse


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)


# catalog


def check_recipes(catalog: Catalog) -> list:
    out = []
    bad = []
    for s in catalog.generators():
        try:
            check_recipe(RECIPE_BY_SYMBOL[s], catalog.get(s, keep=False))
        except RecipeError as exc:
            bad.append(str(exc))
    n = len(catalog.generators())
    out.append(Check("every recipe nonzero with its own multidegree", not bad, "; ".join(bad[:3]) or f"{n} entries"))
    total = len(catalog.symbols())
    want = sum(expected_counts().values())
    out.append(
        Check(
            "generator total matches the count table",
            total == want and GROUND in catalog,
            f"{total} generators including f ({total - 1} transvectants), table total {want}",
        )
    )
    have = generator_counts(catalog)
    exp = {k: v for k, v in expected_counts().items() if k[0] <= catalog.dmax}
    diff = sorted(k for k in set(have) | set(exp) if have.get(k, 0) != exp.get(k, 0))
    out.append(Check("per-(degree, type) counts match the table", not diff, f"mismatches {diff}" if diff else ""))
    return out


# transvectants


def check_transvectants(catalog: Catalog, max_degree: int = 4, max_order: int = 4) -> list:
    from .transvect import oracle_transvectant, transvectant

    syms = [s for s in catalog.symbols() if CovariantSymbol.parse(s).degree < max_degree]
    indices = [e for e in product(range(max_order + 1), repeat=4) if sum(e) <= max_order]
    n = bad = 0
    first = ""
    for a, b in product(syms, repeat=2):
        if CovariantSymbol.parse(a).degree + CovariantSymbol.parse(b).degree > max_degree:
            continue
        pa, pb = catalog[a], catalog[b]
        for e in indices:
            n += 1
            if transvectant(pa, pb, e) != oracle_transvectant(pa, pb, e):
                bad += 1
                first = first or f"({a}, {b})^{''.join(map(str, e))}"
    out = [Check("closed form equals the Omega-process oracle", not bad, f"{n} cases, {bad} differ {first}".strip())]
    f = catalog[GROUND]
    odd = [e for e in product(range(3), repeat=4) if sum(e) % 2]
    nonzero = [e for e in odd if transvectant(f, f, e)]
    out.append(Check("(f, f)^e vanishes for odd |e|", not nonzero, f"{len(odd)} indices"))
    return out


# separation


def check_separation(catalog: Catalog) -> list:
    from .relations import SEPARATION_INVARIANTS, SIGNATURE, printed_value_checks, separation_report

    rows = separation_report(catalog)
    out = []
    for sym, form, text, got, eq in printed_value_checks(rows):
        out.append(Check(f"{sym}({form}) = {text}", eq, "" if eq else f"computed {got}"))
    for r in rows:
        out.append(Check(f"{', '.join(SEPARATION_INVARIANTS)} vanish on {r.form}", r.invariants_vanish))
    for r in rows:
        want = SIGNATURE[r.form]
        out.append(
            Check(
                f"(C_3111, D_2200) nonvanishing pattern on {r.form} is {_pattern(want)}",
                r.signature == want,
                f"found {_pattern(r.signature)}; C^1_1111 pattern {_pattern((bool(r.values['C^1_1111']),))}",
            )
        )
    return out


def _pattern(bits) -> str:
    return "(" + ", ".join("!=0" if b else "0" for b in bits) + ")"


# syzygies and sources


def check_syzygies(catalog: Catalog, derived: bool = True) -> list:
    from .relations import CONTROL, DERIVED_SYZYGIES, PRINTED_SYZYGIES, verify_syzygy

    out = []
    for s in PRINTED_SYZYGIES:
        out.append(Check(f"as printed: {s.description}", verify_syzygy(s, catalog)))
    out.append(Check(CONTROL.description + " does not vanish", not verify_syzygy(CONTROL, catalog)))
    if derived:
        for s in DERIVED_SYZYGIES:
            out.append(Check(s.description, verify_syzygy(s, catalog)))
    return out


def check_sources(catalog: Catalog) -> list:
    from .relations import Formal, check_sources_table, rationalization_syzygy, rationalize, verify_syzygy

    out = []
    for c in check_sources_table(catalog):
        out.append(
            Check(f"c_{c.label} is the source of {c.printed}", c.ok, "" if c.ok else f"found {c.found}")
        )
    num, fp = rationalize("D_4000", catalog)
    n = Formal.name
    printed = -(n("C_3111") ** 2 + n("b_xt") * n("b_xy") * n("b_xz") * 4)
    out.append(
        Check(
            "rationalize(D_4000) = -(C_3111^2 + 4*b_xt*b_xy*b_xz) / f^2",
            num == printed and fp == 2,
            f"got ({num}) / f^{fp}",
        )
    )
    syz = rationalization_syzygy("D_4000", catalog)
    out.append(Check("rationalization of D_4000 is an identity", verify_syzygy(syz, catalog), str(syz)))
    return out


# Hilbert series


def check_hilbert(tmax_consistency: int = 8, tmax_compare: int = 8) -> list:
    from . import hilbert as hb

    out = []
    diag = hb.diagonal_series(2)
    out.append(Check("diagonal series starts 1, u^4, 1 + 6u^4 + u^8", diag == [{0: 1}, {4: 1}, {0: 1, 4: 6, 8: 1}]))
    bad = [d for d in range(tmax_consistency + 1) if hb.consistency_sum(d) != comb(15 + d, d)]
    out.append(Check(f"sum_mu c(d;mu) dim(mu) = C(15+d, d) for d <= {tmax_consistency}", not bad, f"fails at {bad}" if bad else ""))
    k = hb.krull_dimension()
    out.append(Check("Krull dimension is 12", k == 12, f"printed Q alone gives {hb.krull_dimension(hb.PRINTED_Q)}"))
    report = hb.compare_with_printed_PQ(tmax_compare)
    out.append(
        Check(
            f"printed P/Q compared with L S up to t^{tmax_compare}",
            True,
            f"{len(report)} mismatching cells; with (1-t^4)^2 in Q: {len(hb.compare_with_printed_PQ(tmax_compare, hb.DIAGONAL_Q))}",
        )
    )
    return out


# the generic family G_abcd


SEXTICS = (("L_6000", "x", 144), ("L_0600", "y", 96), ("L_0060", "z", 288), ("L_0006", "t", -96))

QUADRILINEAR = {
    "C^1_1111": (
        "3*a^3 - a*d^2 - a*b^2 - a*c^2",
        "-b*c^2 - b*a^2 - b*d^2 + 3*b^3",
        "-b^2*c + 3*c^3 - c*a^2 - c*d^2",
        "-a^2*d + 3*d^3 - d*b^2 - d*c^2",
    ),
    "C^2_1111": (
        "2*a*b^2 + 2*a*c^2 + 2*a*d^2 + 6*b*c*d",
        "2*a^2*b + 2*b*d^2 + 2*b*c^2 + 6*a*c*d",
        "2*b^2*c + 6*a*b*d + 2*a^2*c + 2*c*d^2",
        "2*a^2*d + 6*a*b*c + 2*b^2*d + 2*c^2*d",
    ),
    "E_1111": (
        "-8*a^3*d^2 - 8*a^3*c^2 - 8*a^3*b^2 + 8*a*c^2*d^2 + 8*a*b^2*c^2 + 8*a*b^2*d^2",
        "-8*b^3*c^2 + 8*b*c^2*d^2 + 8*a^2*b*c^2 - 8*b^3*d^2 + 8*a^2*b*d^2 - 8*a^2*b^3",
        "8*a^2*c*d^2 + 8*a^2*b^2*c + 8*b^2*c*d^2 - 8*b^2*c^3 - 8*c^3*d^2 - 8*a^2*c^3",
        "8*b^2*c^2*d + 8*a^2*b^2*d + 8*a^2*c^2*d - 8*a^2*d^3 - 8*c^2*d^3 - 8*b^2*d^3",
    ),
}


def _sum_terms(text: str) -> Poly:
    """Parse a sum of terms whose monomials may repeat."""
    out = Poly.zero()
    for sign, chunk in _split(text):
        out = out + parse(chunk).scale(sign)
    return out


def _split(text):
    from .poly import _split_terms

    for sign, term in _split_terms(text):
        yield sign, term.strip()


def quadrilinear_shape(A: Poly, B: Poly, C: Poly, D: Poly) -> Poly:
    m = parse
    total = (
        (A + D) * m("x1*y1*z1*t1")
        + (A - D) * m("x1*y1*z2*t2")
        + (B + C) * m("x1*y2*z1*t2")
        + (B - C) * m("x1*y2*z2*t1")
        + (B - C) * m("x2*y1*z1*t2")
        + (B + C) * m("x2*y1*z2*t1")
        + (A - D) * m("x2*y2*z1*t1")
        + (A + D) * m("x2*y2*z2*t2")
    )
    return total.scale(Fraction(1, 2))


def kasner_ok(p: Poly, u: str, v: str) -> bool:
    """Support inside ``{u1^2v1^2, u2^2v2^2, u1^2v2^2, u2^2v1^2, u1u2v1v2}`` with paired coefficients."""
    from .poly import VARIABLE_MASK, coefficient_extract, monomial

    allowed = {
        "k1": f"{u}1^2*{v}1^2",
        "k2": f"{u}2^2*{v}2^2",
        "l1": f"{u}1^2*{v}2^2",
        "l2": f"{u}2^2*{v}1^2",
        "m": f"{u}1*{u}2*{v}1*{v}2",
    }
    mons = {k: monomial(v_) for k, v_ in allowed.items()}
    if any((m & VARIABLE_MASK) not in mons.values() for m in p.terms):
        return False
    c = {k: coefficient_extract(p, m) for k, m in mons.items()}
    return c["k1"] == c["k2"] and c["l1"] == c["l2"]


def check_generic_family(catalog: Catalog | None = None) -> list:
    """Evaluations on G_abcd; by recipe when no degree-12 catalog is given."""
    from .normalforms import evaluate_by_recipe, evaluate_covariant, vandermonde_sq

    def ev(sym):
        if catalog is not None and sym in catalog:
            return evaluate_covariant(sym, "G_abcd", catalog)
        return evaluate_by_recipe(sym, "G_abcd")

    V = vandermonde_sq()
    out = []
    ratios = {}
    for sym, var, k in SEXTICS:
        shape = (Poly.var(f"{var}1") ** 4 - Poly.var(f"{var}2") ** 4) * Poly.var(f"{var}1") * Poly.var(f"{var}2") * V
        got = ev(sym)
        m, c = next(iter(shape.terms.items()))
        r = got.terms.get(m, 0) / c if got else 0
        ratios[sym] = r if got == shape.scale(r) else None
    for sign in (1, -1):
        if all(ratios[s] == sign * k for s, _, k in SEXTICS):
            break
    else:
        sign = None
    found = ", ".join(f"{s}: {ratios[s]}" for s, _, _ in SEXTICS)
    out.append(
        Check(
            "L_6000, L_0600, L_0060, L_0006 = 144, 96, 288, -96 times V(a^2,b^2,c^2,d^2) times the sextic",
            sign is not None,
            f"multiples found {found}",
        )
    )
    for name in ("b_xy", "b_xz", "b_xt", "b_yz", "b_yt", "b_zt"):
        u, v = name[2], name[3]
        out.append(Check(f"{name} on G_abcd has the Kasner shape", kasner_ok(ev(name), u, v)))
    for sym, texts in QUADRILINEAR.items():
        want = quadrilinear_shape(*(_sum_terms(t) for t in texts))
        out.append(Check(f"{sym} on G_abcd matches its coefficient formulas", ev(sym) == want))
    return out


def check_minimality(catalog: Catalog, dmax: int = 6, jobs: int = 1) -> tuple:
    from .minimality import permutation_consistent, verify_table

    reports = verify_table(dmax, catalog, jobs=jobs)
    checks = [
        Check(f"all {len(reports)} cells with d <= {dmax} match the table", all(r.ok for r in reports)),
        Check("cells related by permutation agree", permutation_consistent(reports)),
    ]
    return reports, checks


__all__ = [
    "Check",
    "all_ok",
    "check_generic_family",
    "check_hilbert",
    "check_minimality",
    "check_recipes",
    "check_separation",
    "check_sources",
    "check_syzygies",
    "check_transvectants",
]

