"""Exact quaternion arithmetic over the rationals.

A :class:`Quaternion` keeps its four coefficients over one shared positive
denominator, reduced so that the five integers have no common factor.  The
public coefficients ``x0 .. x3`` are exposed as :class:`fractions.Fraction`
values in lowest terms; the shared-denominator layout only exists to keep the
Hamilton product down to integer multiplications.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "Quaternion",
    "ZeroDivisorError",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "qmul",
    "qconj",
    "norm_sq",
    "qinv",
    "unit_from_seed",
    "parse_rational",
    "format_rational",
]

Scalar = Union[int, Fraction, str]


class ZeroDivisorError(ZeroDivisionError):
    """Raised when a zero quaternion is inverted or used as a seed."""


def parse_rational(text: Scalar) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or pass through an int / Fraction)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Rational):
        return Fraction(text.numerator, text.denominator)
    if not isinstance(text, str):
        raise TypeError(f"cannot interpret {text!r} as an exact rational")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class Quaternion:
    """Immutable quaternion ``x0 + x1 i + x2 j + x3 k`` with rational coefficients."""

    __slots__ = ("_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, x0: Scalar = 0, x1: Scalar = 0, x2: Scalar = 0, x3: Scalar = 0):
        fs = [parse_rational(x) for x in (x0, x1, x2, x3)]
        den = 1
        for f in fs:
            den = den * f.denominator // gcd(den, f.denominator)
        a, b, c, d = (f.numerator * (den // f.denominator) for f in fs)
        self._set(a, b, c, d, den)

    def _set(self, a: int, b: int, c: int, d: int, den: int) -> None:
        g = gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        self._a = a
        self._b = b
        self._c = c
        self._d = d
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "Quaternion":
        # den must be > 0; reduction happens in _set
        q = object.__new__(cls)
        q._set(a, b, c, d, den)
        return q

    @classmethod
    def from_strings(cls, parts: Iterable[str]) -> "Quaternion":
        parts = list(parts)
        if len(parts) != 4:
            raise ValueError(f"a quaternion needs 4 components, got {len(parts)}")
        return cls(*parts)

    # -- components ---------------------------------------------------------

    @property
    def x0(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def x1(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def x2(self) -> Fraction:
        return Fraction(self._c, self._den)

    @property
    def x3(self) -> Fraction:
        return Fraction(self._d, self._den)

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x0, self.x1, self.x2, self.x3)

    def re(self) -> Fraction:
        return self.x0

    def im(self) -> "Quaternion":
        return Quaternion._raw(0, self._b, self._c, self._d, self._den)

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_real(self) -> bool:
        return not (self._b or self._c or self._d)

    def is_unit(self) -> bool:
        return self._a * self._a + self._b * self._b + self._c * self._c + self._d * self._d == self._den * self._den

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction)):
                other = Quaternion(other)
            else:
                return NotImplemented
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = other._a, other._b, other._c, other._d
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            self._den * other._den,
        )

    def __rmul__(self, other) -> "Quaternion":
        if isinstance(other, (int, Fraction)):
            return Quaternion(other) * self
        return NotImplemented

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction)):
                other = Quaternion(other)
            else:
                return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return Quaternion._raw(self._a + other._a, self._b + other._b,
                                   self._c + other._c, self._d + other._d, d1)
        return Quaternion._raw(
            self._a * d2 + other._a * d1,
            self._b * d2 + other._b * d1,
            self._c * d2 + other._c * d1,
            self._d * d2 + other._d * d1,
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction)):
                other = Quaternion(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Quaternion":
        return (-self) + other

    def conj(self) -> "Quaternion":
        return Quaternion._raw(self._a, -self._b, -self._c, -self._d, self._den)

    def norm_sq(self) -> Fraction:
        s = self._a * self._a + self._b * self._b + self._c * self._c + self._d * self._d
        return Fraction(s, self._den * self._den)

    def inverse(self) -> "Quaternion":
        s = self._a * self._a + self._b * self._b + self._c * self._c + self._d * self._d
        if s == 0:
            raise ZeroDivisorError("zero quaternion has no inverse")
        # conj(q) / |q|^2 with q = (a,b,c,d)/den  ->  den * (a,-b,-c,-d) / s
        den = self._den
        return Quaternion._raw(self._a * den, -self._b * den, -self._c * den, -self._d * den, s)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Quaternion):
            return (self._den == other._den and self._a == other._a and self._b == other._b
                    and self._c == other._c and self._d == other._d)
        if isinstance(other, (int, Fraction)):
            return self.is_real() and Fraction(self._a, self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._a, self._b, self._c, self._d, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- text ---------------------------------------------------------------

    def to_strings(self) -> list[str]:
        """Four ``"p/q"`` strings in the order (x0, x1, x2, x3)."""
        return [format_rational(x) for x in self.components]

    def __repr__(self) -> str:
        return "Quaternion({})".format(", ".join(repr(str(x)) for x in self.components))

    def __str__(self) -> str:
        terms = []
        for coef, unit in zip(self.components, ("", "i", "j", "k")):
            if coef == 0:
                continue
            mag = abs(coef)
            sign = "-" if coef < 0 else "+"
            body = str(mag) if (mag != 1 or not unit) else ""
            terms.append((sign, body + unit))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b`` (order matters)."""
    return a * b


def qconj(q: Quaternion) -> Quaternion:
    return q.conj()


def norm_sq(q: Quaternion) -> Fraction:
    return q.norm_sq()


def qinv(q: Quaternion) -> Quaternion:
    return q.inverse()


def unit_from_seed(p: Quaternion) -> Quaternion:
    """Map a nonzero quaternion ``p`` to the exact unit ``p*p / |p|^2``.

    Every unit except -1 is reached from ``p = 1 + q``; -1 comes from any pure
    imaginary seed.
    """
    s = p.norm_sq()
    if s == 0:
        raise ZeroDivisorError("unit_from_seed needs a nonzero seed")
    return (p * p) * Quaternion(1 / s)
