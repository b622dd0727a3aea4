"""Gaussian rationals p/q + (u/v)i with exact arithmetic."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class GaussQ:
    """An element of Q(i).

    Both parts are stored as :class:`fractions.Fraction`, so lowest terms and
    positive denominators come for free.

    >>> (GaussQ(1, 2) * GaussQ(1, -2))
    GaussQ(5)
    >>> GaussQ(0, 1) ** 2 == -1
    True
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussQ):
            self.re, self.im = re.re, re.im + Fraction(im)
            return
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussQ":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def parse(cls, text: str) -> "GaussQ":
        """Parse ``"3/4"``, ``"-2i"``, ``"1/2+3/5i"``, ``"(1/2+3I/2)"`` style strings."""
        s = text.replace(" ", "").replace("I", "i")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if not s:
            raise ValueError("empty scalar")
        # split into signed terms at every sign not following '/' or an exponent marker
        terms, cur = [], ""
        for k, ch in enumerate(s):
            if ch in "+-" and cur and s[k - 1] not in "/eE":
                terms.append(cur)
                cur = ""
            cur += ch
        terms.append(cur)
        re, im = Fraction(0), Fraction(0)
        for t in terms:
            if "i" not in t:
                re += Fraction(t)
                continue
            if t.count("i") > 1:
                raise ValueError(f"bad scalar {text!r}")
            body = t.replace("i", "")
            sign = -1 if body.startswith("-") else 1
            body = body.lstrip("+-")
            if body.startswith("/"):
                body = "1" + body
            im += sign * Fraction(body or "1")
        return cls(re, im)

    # predicates ----------------------------------------------------------------
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussQ:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussQ._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussQ:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussQ._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if type(other) is not GaussQ:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussQ._raw(a * c, b)
        return GaussQ._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussQ:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if not other:
            raise ZeroDivisionError("division by zero in Q(i)")
        c, d = other.re, other.im
        if not d:
            return GaussQ._raw(self.re / c, self.im / c)
        n = c * c + d * d
        return GaussQ._raw((self.re * c + self.im * d) / n, (self.im * c - self.re * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussQ._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussQ":
        return GaussQ._raw(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # comparison ----------------------------------------------------------------
    def __eq__(self, other):
        if type(other) is not GaussQ:
            other = _coerce(other)
            if other is NotImplemented:
                return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # display -------------------------------------------------------------------
    def __repr__(self):
        if not self.im:
            return f"GaussQ({self.re})"
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return str(re)
        if not re:
            return _imag_str(im)
        sign = "+" if im > 0 else "-"
        return f"({re}{sign}{_imag_str(abs(im))})"


def _imag_str(im: Fraction) -> str:
    sign = "-" if im < 0 else ""
    im = abs(im)
    num = "" if im.numerator == 1 else str(im.numerator)
    den = "" if im.denominator == 1 else f"/{im.denominator}"
    return f"{sign}{num}I{den}"


def _coerce(x):
    if type(x) is GaussQ:
        return x
    if isinstance(x, (int, Rational)):
        return GaussQ._raw(Fraction(x), Fraction(0))
    return NotImplemented


def as_scalar(x) -> GaussQ:
    """Coerce ints, Fractions and GaussQ; refuse floats and complex numbers."""
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"not an exact scalar: {x!r}")
    return y


ZERO = GaussQ._raw(Fraction(0), Fraction(0))
ONE = GaussQ._raw(Fraction(1), Fraction(0))
I = GaussQ._raw(Fraction(0), Fraction(1))
