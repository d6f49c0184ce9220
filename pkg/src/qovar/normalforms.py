"""The nine SLOCC normal forms and evaluation of covariants on them.

A ket ``|ijkl>`` is the monomial ``x_i y_j z_k t_l`` with ket index 0 -> component 1
and 1 -> component 2, i.e. ``a[ijkl]`` is the amplitude of ``|ijkl>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import FieldElem
from .poly import Poly, coeff_index, ground_form, substitute
from .transvect import transvectant

_half = Fraction(1, 2)
_a, _b, _c, _d = (Poly.var(v) for v in "abcd")
_one = Poly.const(1)
_i = FieldElem(0, 1)
_i_over_r2 = FieldElem(0, 0, 0, Fraction(1, 2))  # i/sqrt(2) = I*R/2


def _kets(*pairs) -> dict:
    out = {}
    for value, labels in pairs:
        if not isinstance(value, Poly):
            value = Poly.const(value)
        for lab in labels.split():
            out[lab] = value
    return out


@dataclass(frozen=True)
class NormalForm:
    name: str
    amplitudes: dict  # ket label -> Poly in a, b, c, d

    @property
    def assignment(self) -> dict:
        """``a[ijkl] -> amplitude`` for all 16 coefficients (absent kets -> 0)."""
        zero = Poly.zero()
        return {coeff_index(f"{k:04b}"): self.amplitudes.get(f"{k:04b}", zero) for k in range(16)}

    @property
    def parametric(self) -> bool:
        return any(len(v.support_vars()) for v in self.amplitudes.values())


NORMAL_FORMS = {
    nf.name: nf
    for nf in (
        NormalForm(
            "G_abcd",
            _kets(
                ((_a + _d) * _half, "0000 1111"),
                ((_a - _d) * _half, "0011 1100"),
                ((_b + _c) * _half, "0101 1010"),
                ((_b - _c) * _half, "0110 1001"),
            ),
        ),
        NormalForm(
            "L_abc2",
            _kets(
                ((_a + _b) * _half, "0000 1111"),
                ((_a - _b) * _half, "0011 1100"),
                (_c, "0101 1010"),
                (1, "0110"),
            ),
        ),
        NormalForm("L_a2b2", _kets((_a, "0000 1111"), (_b, "0101 1010"), (1, "0110 0011"))),
        NormalForm(
            "L_ab3",
            _kets(
                (_a, "0000 1111"),
                ((_a + _b) * _half, "0101 1010"),
                ((_a - _b) * _half, "0110 1001"),
                (_i_over_r2, "0001 0010 0111 1011"),
            ),
        ),
        NormalForm("L_a4", _kets((_a, "0000 0101 1010 1111"), (_i, "0001"), (1, "0110"), (-_i, "1011"))),
        NormalForm("L_a2_0_3+1bar", _kets((_a, "0000 1111"), (1, "0011 0101 0110"))),
        NormalForm("L_0_5+3bar", _kets((1, "0000 0101 1000 1110"))),
        NormalForm("L_0_7+1bar", _kets((1, "0000 1011 1101 1110"))),
        NormalForm("L_0_3+1bar_0_3+1bar", _kets((1, "0000 0111"))),
    )
}

NAMES = tuple(NORMAL_FORMS)


def normal_form(name: str) -> NormalForm:
    try:
        return NORMAL_FORMS[name]
    except KeyError:
        raise KeyError(f"unknown normal form {name!r}; choose from {', '.join(NAMES)}") from None


def specialize(p: Poly, name: str) -> Poly:
    """Substitute the amplitudes of a normal form into ``p``.

    Coefficients sharing an amplitude are first merged into one
    representative, so each distinct amplitude product is expanded once.
    """
    nf = normal_form(name)
    assignment = nf.assignment
    reps: dict = {}
    relabel = {}
    for k, val in assignment.items():
        if not val:
            relabel[k] = Poly.zero()
            continue
        rep = reps.setdefault(val, k)
        if rep != k:
            relabel[k] = Poly.var(rep)
    staged = substitute(p, relabel)
    return substitute(staged, {rep: val for val, rep in reps.items()})


def state(name: str) -> Poly:
    """The ground form of a normal form (a polynomial in variables and parameters)."""
    return specialize(ground_form(), name)


def evaluate_covariant(symbol: str, name: str, catalog) -> Poly:
    """Value of a catalog covariant (or alias such as ``b_xy``) on a normal form."""
    normal_form(name)
    return specialize(catalog[symbol], name)


def evaluate_by_recipe(symbol: str, name: str) -> Poly:
    """Evaluate by running the recipe chain on the specialised ground form.

    Substitution of the amplitudes commutes with transvection, so this is
    an independent route to :func:`evaluate_covariant`.
    """
    from .catalog import ALIASES, GROUND, RECIPE_BY_SYMBOL, canonical_symbol

    symbol = canonical_symbol(symbol)
    if symbol in ALIASES:
        scale, sym = ALIASES[symbol]
        return evaluate_by_recipe(sym, name).scale(scale)
    f = state(name)
    memo = {GROUND: f}

    def go(sym):
        if sym not in memo:
            r = RECIPE_BY_SYMBOL[sym]
            memo[sym] = transvectant(f, go(str(r.right)), r.index)
        return memo[sym]

    return go(symbol)


def set_parameters(p: Poly, values: dict) -> Poly:
    """Numeric specialisation ``{'a': Fraction(3, 2), ...}`` of the parameters."""
    return substitute(p, {k: Poly.const(v) for k, v in values.items()})


def vandermonde_sq(params=("a", "b", "c", "d")) -> Poly:
    """``V(a^2, b^2, c^2, d^2) = prod_{p<q} (w_q - w_p)`` over ``w = (a^2, b^2, c^2, d^2)``.

    ``params`` may be parameter names or constants.
    """
    w = []
    for v in params:
        base = v if isinstance(v, Poly) else (Poly.var(v) if isinstance(v, str) else Poly.const(v))
        w.append(base * base)
    out = Poly.const(1)
    for p in range(4):
        for q in range(p + 1, 4):
            out = out * (w[q] - w[p])
    return out
