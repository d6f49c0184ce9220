"""Sparse exact polynomials over a fixed universe of 28 indeterminates.

The universe, in increasing order::

    a[0000] < a[0001] < ... < a[1111] < x1 < x2 < y1 < y2 < z1 < z2 < t1 < t2
    < a < b < c < d

A monomial is packed into a single Python ``int``: the exponent of the
indeterminate with index ``k`` occupies bits ``8k .. 8k+7``.  Multiplying
monomials is integer addition, and for monomials of equal total degree
integer comparison is lexicographic comparison starting at the largest
indeterminate, so graded-lex order is ``(total_degree, key)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FieldElem, format_coeff, parse_coeff, to_rational

NVARS = 28
BITS = 8
MAXEXP = (1 << BITS) - 1
NBYTES = NVARS

COEFF_NAMES = tuple(f"a[{i:04b}]" for i in range(16))
VARIABLE_NAMES = ("x1", "x2", "y1", "y2", "z1", "z2", "t1", "t2")
PARAM_NAMES = ("a", "b", "c", "d")
NAMES = COEFF_NAMES + VARIABLE_NAMES + PARAM_NAMES
INDEX = {name: k for k, name in enumerate(NAMES)}
INDEX.update({f"a{i:04b}": i for i in range(16)})

SLOTS = ("x", "y", "z", "t")
COEFF_MASK = (1 << (16 * BITS)) - 1
VARIABLE_MASK = ((1 << (8 * BITS)) - 1) << (16 * BITS)
PARAM_MASK = ((1 << (4 * BITS)) - 1) << (24 * BITS)


def var_index(v) -> int:
    if isinstance(v, int):
        if not 0 <= v < NVARS:
            raise ValueError(f"indeterminate index out of range: {v}")
        return v
    try:
        return INDEX[v]
    except KeyError:
        raise ValueError(f"unknown indeterminate {v!r}") from None


def coeff_index(label: str) -> int:
    """Index of ``a[label]`` for a 4-bit label such as ``'0110'``."""
    return int(label, 2)


def slot_indices(slot) -> tuple[int, int]:
    """Indices of the two components of a binary variable (``'x'`` or 0..3)."""
    s = SLOTS.index(slot) if isinstance(slot, str) else slot
    return 16 + 2 * s, 17 + 2 * s


def unit(k: int) -> int:
    return 1 << (BITS * k)


def exponents(m: int) -> bytes:
    """Exponent vector of a packed monomial, one byte per indeterminate."""
    return m.to_bytes(NBYTES, "little")


def pack(exps) -> int:
    return int.from_bytes(bytes(exps), "little")


def monomial(spec=None, **kw) -> int:
    """Build a packed monomial from a mapping, a ``'x1*y2^2'`` string, or kwargs."""
    exps = [0] * NVARS
    if isinstance(spec, str):
        spec = _parse_factors(spec) if spec.strip() not in ("", "1") else {}
    items = list((spec or {}).items()) + list(kw.items())
    for name, e in items:
        exps[var_index(name)] += e
    if any(e > MAXEXP or e < 0 for e in exps):
        raise ValueError("exponent out of range")
    return pack(exps)


def total_degree(m: int) -> int:
    return sum(m.to_bytes(NBYTES, "little"))


def grlex_key(m: int):
    return (sum(m.to_bytes(NBYTES, "little")), m)


def render_monomial(m: int) -> str:
    e = exponents(m)
    return "*".join(
        NAMES[k] if e[k] == 1 else f"{NAMES[k]}^{e[k]}" for k in range(NVARS) if e[k]
    )


_FACTOR_RE = re.compile(r"^(a\[[01]{4}\]|[xyzt][12]|[abcd])(?:\^(\d+))?$")


_FACTOR_MONO: dict = {}


def _factor_monomial(f: str) -> tuple:
    m = _FACTOR_MONO.get(f)
    if m is None:
        g = _FACTOR_RE.match(f.strip())
        if not g:
            raise ValueError(f"bad factor {f!r}")
        e = int(g.group(2) or 1)
        if e > MAXEXP:
            raise ValueError(f"exponent too large in {f!r}")
        m = _FACTOR_MONO[f] = (e << (BITS * INDEX[g.group(1)]), e)
    return m


def _parse_monomial(text: str) -> int:
    m = deg = 0
    for f in text.split("*"):
        u, e = _factor_monomial(f)
        m += u
        deg += e
    # a carry between packed fields lowers the byte sum
    if m.bit_length() > BITS * NVARS or total_degree(m) != deg:
        raise ValueError(f"exponent out of range in {text!r}")
    return m


def _parse_factors(text: str) -> dict:
    out: dict = {}
    for f in text.split("*"):
        m = _FACTOR_RE.match(f.strip())
        if not m:
            raise ValueError(f"bad factor {f!r}")
        out[m.group(1)] = out.get(m.group(1), 0) + int(m.group(2) or 1)
    return out


@dataclass(frozen=True)
class MultiDegree:
    """Degree ``d`` in the form coefficients and ``mu`` in x, y, z, t."""

    d: int
    mu: tuple[int, int, int, int]

    def __str__(self):
        return f"({self.d}; {','.join(map(str, self.mu))})"


def monomial_multidegree(m: int) -> MultiDegree:
    e = exponents(m)
    return MultiDegree(sum(e[:16]), tuple(e[16 + 2 * s] + e[17 + 2 * s] for s in range(4)))


class Poly:
    """Immutable sparse polynomial: ``{packed monomial: coefficient}``.

    Coefficients are ``int``, ``Fraction`` or :class:`FieldElem`; zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            if isinstance(m, str):
                m = monomial(m)
            c = to_rational(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _make(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_accum(cls, acc: dict) -> "Poly":
        return cls._make({m: c for m, c in acc.items() if c})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._make({})

    @classmethod
    def const(cls, c) -> "Poly":
        c = to_rational(c)
        return cls._make({0: c} if c else {})

    @classmethod
    def var(cls, v) -> "Poly":
        return cls._make({unit(var_index(v)): 1})

    @classmethod
    def mono(cls, spec, c=1) -> "Poly":
        return cls({monomial(spec): c})

    @property
    def terms(self) -> dict:
        """Read-only view; do not mutate."""
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, FieldElem)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        s = render(self)
        if len(s) > 200:
            s = s[:200] + "..."
        return f"Poly({s})"

    def __str__(self):
        return render(self)

    # ring operations

    def __neg__(self):
        return Poly._make({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction, FieldElem)):
                other = Poly.const(other)
            else:
                return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        acc = dict(big)
        get = acc.get
        for m, c in small.items():
            acc[m] = get(m, 0) + c
        return Poly._from_accum(acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self._terms)
        get = acc.get
        for m, c in other._terms.items():
            acc[m] = get(m, 0) - c
        return Poly._from_accum(acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return exact_divide(self, other)
        if isinstance(other, (int, Fraction, FieldElem)):
            if isinstance(other, int):
                other = Fraction(other)
            return self.scale(1 / other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        c = to_rational(c)
        if not c:
            return Poly.zero()
        if c == 1:
            return self
        return Poly._from_accum({m: to_rational(v * c) for m, v in self._terms.items()})

    def shift(self, m: int) -> "Poly":
        """Multiply by the monomial with packed key ``m``."""
        return Poly._make({k + m: c for k, c in self._terms.items()})

    # inspection

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m) -> object:
        if isinstance(m, str):
            m = monomial(m)
        return self._terms.get(m, 0)

    def monomials(self):
        return sorted(self._terms, key=grlex_key, reverse=True)

    def is_rational(self) -> bool:
        return not any(isinstance(c, FieldElem) for c in self._terms.values())

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def support_vars(self) -> set:
        used = 0
        for m in self._terms:
            used |= m
        e = exponents(used)
        return {NAMES[k] for k in range(NVARS) if e[k]}

    def lead(self):
        """Leading ``(monomial, coefficient)`` in graded-lex order."""
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    def max_abs_coeff(self):
        return max((abs(c) for c in self._terms.values() if not isinstance(c, FieldElem)), default=0)


def poly_mul(p: Poly, q: Poly) -> Poly:
    pt, qt = p._terms, q._terms
    if not pt or not qt:
        return Poly.zero()
    if len(pt) > len(qt):
        pt, qt = qt, pt
    if len(pt) == 1:
        ((m1, c1),) = pt.items()
        if c1 == 1:
            return Poly._make({m1 + m2: c2 for m2, c2 in qt.items()})
        return Poly._from_accum({m1 + m2: c1 * c2 for m2, c2 in qt.items()})
    acc: dict = {}
    get = acc.get
    for m1, c1 in pt.items():
        for m2, c2 in qt.items():
            k = m1 + m2
            acc[k] = get(k, 0) + c1 * c2
    return Poly._from_accum(acc)


def partial_derivative(p: Poly, v, order: int = 1) -> Poly:
    return multi_derivative(p, {var_index(v): order})


def multi_derivative(p: Poly, orders: dict) -> Poly:
    """Apply ``prod_k d^{orders[k]}/d v_k^{orders[k]}`` to ``p``."""
    orders = {var_index(k): n for k, n in orders.items() if n}
    if not orders:
        return p
    plan = [(BITS * k, n, n << (BITS * k)) for k, n in sorted(orders.items())]
    sub_all = sum(s for _, _, s in plan)
    out = {}
    for m, c in p._terms.items():
        mult = 1
        for shift, n, _ in plan:
            e = (m >> shift) & MAXEXP
            if e < n:
                break
            for j in range(n):
                mult *= e - j
        else:
            out[m - sub_all] = c * mult
    return Poly._make(out)


def _demote(c):
    return to_rational(c) if isinstance(c, FieldElem) else c


def substitute(p: Poly, assignment: dict) -> Poly:
    """Simultaneous substitution ``v -> assignment[v]``; others are fixed.

    Images that are a single term are applied by monomial relabelling;
    the remaining images are expanded once per distinct sub-monomial.
    """
    mono_img = {}
    gen_img = {}
    for v, img in assignment.items():
        k = var_index(v)
        if not isinstance(img, Poly):
            img = Poly.const(img)
        if not img:
            mono_img[k] = (0, 0)
        elif len(img) == 1:
            ((m, c),) = img._terms.items()
            if m == unit(k) and c == 1:
                continue
            mono_img[k] = (m, c)
        else:
            gen_img[k] = img
    if not mono_img and not gen_img:
        return p

    mono_mask = sum(MAXEXP << (BITS * k) for k in mono_img)
    gen_mask = sum(MAXEXP << (BITS * k) for k in gen_img)
    mono_list = sorted(mono_img.items())
    gen_keys = sorted(gen_img)

    # stage 1: relabel single-term images, bucket by the general sub-monomial
    groups: dict = {}
    for m, c in p._terms.items():
        rest = m & ~(mono_mask | gen_mask)
        if m & mono_mask:
            zero = False
            for k, (im, ic) in mono_list:
                e = (m >> (BITS * k)) & MAXEXP
                if e:
                    if not ic:
                        zero = True
                        break
                    rest += im * e
                    if ic != 1:
                        c = c * ic**e
            if zero:
                continue
        g = m & gen_mask
        bucket = groups.setdefault(g, {})
        bucket[rest] = bucket.get(rest, 0) + c

    # stage 2: expand each distinct general sub-monomial once
    cache = {0: Poly.const(1)}

    def image_of(g: int) -> Poly:
        hit = cache.get(g)
        if hit is not None:
            return hit
        for k in gen_keys:
            if (g >> (BITS * k)) & MAXEXP:
                val = image_of(g - unit(k)) * gen_img[k]
                break
        cache[g] = val
        return val

    acc: dict = {}
    get = acc.get
    for g, bucket in groups.items():
        img = image_of(g)._terms
        for r, c in bucket.items():
            if not c:
                continue
            for m2, c2 in img.items():
                k = r + m2
                acc[k] = get(k, 0) + c * c2
    return Poly._make({m: _demote(c) for m, c in acc.items() if c})


def split_by_mask(p: Poly, mask: int) -> dict:
    """Group terms by ``m & mask``: ``{masked monomial: Poly of the rest}``."""
    out: dict = {}
    inv = ~mask
    for m, c in p._terms.items():
        out.setdefault(m & mask, {})[m & inv] = c
    return {k: Poly._make(v) for k, v in out.items()}


def coefficient_extract(p: Poly, m) -> Poly:
    """Coefficient of the variable monomial ``m`` (x, y, z, t components only)."""
    if isinstance(m, str):
        m = monomial(m)
    if m & ~VARIABLE_MASK:
        raise ValueError("coefficient_extract expects a monomial in x, y, z, t only")
    return Poly._make({k - m: c for k, c in p._terms.items() if k & VARIABLE_MASK == m})


def variable_part(p: Poly) -> dict:
    return split_by_mask(p, VARIABLE_MASK)


def _divides(a: int, b: int) -> bool:
    ea, eb = exponents(a), exponents(b)
    return all(x <= y for x, y in zip(ea, eb))


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def exact_divide(p: Poly, q: Poly) -> Poly:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return Poly.zero()
    if len(q) == 1:
        ((qm, qc),) = q._terms.items()
        inv = 1 / (Fraction(qc) if isinstance(qc, int) else qc)
        out = {}
        for m, c in p._terms.items():
            if not _divides(qm, m):
                raise DivisionError(f"{render_monomial(qm)} does not divide {render_monomial(m)}")
            out[m - qm] = to_rational(c * inv)
        return Poly._make(out)
    qm, qc = q.lead()
    qinv = 1 / (Fraction(qc) if isinstance(qc, int) else qc)
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        m = max(rem, key=grlex_key)
        if not _divides(qm, m):
            raise DivisionError("divisor does not divide dividend exactly")
        c = to_rational(rem[m] * qinv)
        qk = m - qm
        quot[qk] = c
        for m2, c2 in q._terms.items():
            k = m2 + qk
            v = rem.get(k, 0) - c * c2
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Poly._make(quot)


INHOMOGENEOUS = "inhomogeneous"


def multidegree(p: Poly):
    """Common ``MultiDegree`` of all terms, or ``INHOMOGENEOUS``.

    The zero polynomial has no degree and is reported as inhomogeneous.
    """
    if not p:
        return INHOMOGENEOUS
    seen = None
    for m in p._terms:
        e = m.to_bytes(NBYTES, "little")
        key = (sum(e[:16]), e[16] + e[17], e[18] + e[19], e[20] + e[21], e[22] + e[23])
        if seen is None:
            seen = key
        elif key != seen:
            return INHOMOGENEOUS
    return MultiDegree(seen[0], seen[1:])


def a_degree(p: Poly) -> int:
    md = multidegree(p)
    if md == INHOMOGENEOUS:
        raise ValueError("polynomial is not multihomogeneous")
    return md.d


# canonical text format


def render(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for i, m in enumerate(p.monomials()):
        c = p._terms[m]
        mono = render_monomial(m)
        if isinstance(c, FieldElem):
            sign, body = "+", format_coeff(c)
        else:
            sign = "-" if c < 0 else "+"
            body = format_coeff(abs(c))
        term = f"{body}*{mono}" if mono else body
        if i == 0:
            out.append(("-" if sign == "-" else "") + term)
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


def _split_terms(text: str):
    """Split at top-level ``' + '`` / ``' - '``; yields ``(sign, term)``."""
    depth = 0
    sign = 1
    start = 0
    i = 0
    if text.startswith("-") and not text.startswith("- "):
        sign, start, i = -1, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch == " " and text[i : i + 3] in (" + ", " - "):
            yield sign, text[start:i]
            sign = 1 if text[i + 1] == "+" else -1
            i += 3
            start = i
            continue
        i += 1
    yield sign, text[start:]


_TOP_SPLIT = re.compile(r" ([+-]) ")


def parse(text: str) -> Poly:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        return Poly.zero()
    terms: dict = {}
    if "(" in text:
        pieces = _split_terms(text)
    else:
        parts = _TOP_SPLIT.split(text)
        head = parts[0]
        first = (-1, head[1:]) if head.startswith("-") and not head.startswith("- ") else (1, head)
        pieces = [first] + [(1 if parts[k] == "+" else -1, parts[k + 1]) for k in range(1, len(parts), 2)]
    for sign, term in pieces:
        term = term.strip()
        if not term:
            raise ValueError(f"empty term in {text!r}")
        if term.startswith("("):
            close = term.index(")")
            coeff_text, rest = term[: close + 1], term[close + 1 :]
        elif term[0].isalpha():
            coeff_text, rest = "1", "*" + term
        else:
            star = term.find("*")
            coeff_text, rest = (term, "") if star < 0 else (term[:star], term[star:])
        c = parse_coeff(coeff_text)
        if rest:
            if not rest.startswith("*"):
                raise ValueError(f"bad term {term!r}")
            m = _parse_monomial(rest[1:])
        else:
            m = 0
        if m in terms:
            raise ValueError(f"repeated monomial in {text!r}")
        if c:
            terms[m] = c if sign > 0 else -c
    return Poly._make(terms)


# convenience

def ground_form() -> Poly:
    """``f = sum a[ijkl] x_i y_j z_k t_l`` with ket index 0/1 -> component 1/2."""
    terms = {}
    for idx in range(16):
        i, j, k, l = (idx >> 3) & 1, (idx >> 2) & 1, (idx >> 1) & 1, idx & 1
        m = unit(idx) + unit(16 + i) + unit(18 + j) + unit(20 + k) + unit(22 + l)
        terms[m] = 1
    return Poly._make(terms)


def ket(label: str) -> int:
    """Packed variable monomial ``x_i y_j z_k t_l`` of the ket ``|ijkl>``."""
    i, j, k, l = (int(ch) for ch in label)
    return unit(16 + i) + unit(18 + j) + unit(20 + k) + unit(22 + l)
