"""Exact coefficients: rationals and the extension Q(i, sqrt 2).

Rationals are plain :class:`fractions.Fraction` (or ``int`` on the fast
path).  :class:`FieldElem` is the four-dimensional algebra with basis
``1, I, R, I*R`` where ``I**2 == -1`` and ``R**2 == 2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "FieldElem",
    "I",
    "R",
    "field_mul",
    "field_inv",
    "is_rational",
    "to_rational",
    "format_coeff",
    "parse_coeff",
]

_BASIS = ("", "I", "R", "I*R")


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class FieldElem:
    """``c0 + c1*I + c2*R + c3*I*R`` with rational coordinates.

    Instances are immutable.  Mixed arithmetic with ``int`` and
    ``Fraction`` is supported from either side.
    """

    __slots__ = ("_c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(self, "_c", (_q(c0), _q(c1), _q(c2), _q(c3)))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    c0 = property(lambda self: self._c[0])
    c1 = property(lambda self: self._c[1])
    c2 = property(lambda self: self._c[2])
    c3 = property(lambda self: self._c[3])

    @classmethod
    def coerce(cls, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, _RationalABC)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElem")

    def is_rational(self) -> bool:
        return not (self._c[1] or self._c[2] or self._c[3])

    def __bool__(self):
        return any(self._c)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self._c == other._c
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self._c[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self._c[0])
        return hash(self._c)

    def __neg__(self):
        a, b, c, d = self._c
        return FieldElem(-a, -b, -c, -d)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, FieldElem):
            return FieldElem(*(x + y for x, y in zip(self._c, other._c)))
        if isinstance(other, (int, _RationalABC)):
            a, b, c, d = self._c
            return FieldElem(a + other, b, c, d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (FieldElem, int, _RationalABC)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            return field_mul(self, other)
        if isinstance(other, (int, _RationalABC)):
            return FieldElem(*(x * other for x in self._c))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FieldElem):
            return field_mul(self, field_inv(other))
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i, sqrt 2)")
            return FieldElem(*(x / other for x in self._c))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return field_inv(self) * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return field_inv(self) ** (-n)
        result = FieldElem(1)
        base = self
        while n:
            if n & 1:
                result = field_mul(result, base)
            base = field_mul(base, base)
            n >>= 1
        return result

    def conjugate_i(self) -> "FieldElem":
        """Image under ``I -> -I``."""
        a, b, c, d = self._c
        return FieldElem(a, -b, c, -d)

    def conjugate_r(self) -> "FieldElem":
        """Image under ``R -> -R``."""
        a, b, c, d = self._c
        return FieldElem(a, b, -c, -d)

    def __repr__(self):
        return f"FieldElem({', '.join(str(x) for x in self._c)})"

    def __str__(self):
        return format_coeff(self)


def field_mul(x: FieldElem, y: FieldElem) -> FieldElem:
    a0, a1, a2, a3 = x._c
    b0, b1, b2, b3 = y._c
    # I*I = -1, R*R = 2, (IR)*(IR) = -2
    return FieldElem(
        a0 * b0 - a1 * b1 + 2 * a2 * b2 - 2 * a3 * b3,
        a0 * b1 + a1 * b0 + 2 * a2 * b3 + 2 * a3 * b2,
        a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


def field_inv(x: FieldElem) -> FieldElem:
    """Multiplicative inverse; raises ``ZeroDivisionError`` on zero.

    Uses the two Galois conjugations: ``x * conj_I(x)`` lies in Q(R) and
    ``y * conj_R(y)`` lies in Q.
    """
    x = FieldElem.coerce(x)
    if not x:
        raise ZeroDivisionError("zero has no inverse in Q(i, sqrt 2)")
    xi = x.conjugate_i()
    y = field_mul(x, xi)
    yr = y.conjugate_r()
    n = field_mul(y, yr)
    norm = n.c0
    return field_mul(xi, yr) / norm


I = FieldElem(0, 1, 0, 0)
R = FieldElem(0, 0, 1, 0)


def is_rational(c) -> bool:
    if isinstance(c, FieldElem):
        return c.is_rational()
    return True


def to_rational(c):
    """Demote ``c`` to ``int``/``Fraction`` when it is rational, else return it."""
    if isinstance(c, FieldElem):
        if not c.is_rational():
            return c
        c = c.c0
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _fmt_q(q) -> str:
    q = _q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_coeff(c) -> str:
    """Canonical text: ``p/q`` for rationals, otherwise a parenthesised sum."""
    c = to_rational(c)
    if not isinstance(c, FieldElem):
        return _fmt_q(c)
    parts = []
    for coord, name in zip(c.coords, _BASIS):
        if not coord:
            continue
        text = _fmt_q(coord)
        parts.append(text + ("*" + name if name else ""))
    return "(" + " + ".join(parts) + ")"


_Q_RE = r"-?\d+(?:/\d+)?"
_COMP_RE = re.compile(rf"^({_Q_RE})(?:\*(I\*R|I|R))?$")


def parse_coeff(text: str):
    """Inverse of :func:`format_coeff`."""
    text = text.strip()
    if text.isdigit():
        return int(text)
    if not text.startswith("("):
        if not re.fullmatch(_Q_RE, text):
            raise ValueError(f"bad rational literal: {text!r}")
        return to_rational(Fraction(text))
    if not text.endswith(")"):
        raise ValueError(f"unbalanced coefficient: {text!r}")
    coords = [Fraction(0)] * 4
    for part in text[1:-1].split(" + "):
        m = _COMP_RE.match(part.strip())
        if not m:
            raise ValueError(f"bad coefficient component: {part!r}")
        idx = _BASIS.index(m.group(2) or "")
        if coords[idx]:
            raise ValueError(f"repeated component in {text!r}")
        coords[idx] = Fraction(m.group(1))
    return to_rational(FieldElem(*coords))
