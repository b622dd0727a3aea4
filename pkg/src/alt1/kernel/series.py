"""Truncated multivariate power series with polynomial coefficients.

A series lives in a fixed tuple of *series variables*; every other symbol is a
formal parameter carried inside the :class:`Poly` coefficients.  Truncation is
per variable (inclusive maximum exponent) with an optional cap on the total
degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .poly import Poly, binomial_poly
from .rational import RationalFn
from .scalar import ONE


class SeriesError(ValueError):
    """Raised when an argument cannot be expanded (bad constant term)."""


class FormalSeries:
    __slots__ = ("vars", "order", "total", "coeffs")

    def __init__(self, vars, order, total=None, coeffs=None):
        self.vars = tuple(vars)
        if isinstance(order, int):
            order = {v: order for v in self.vars}
        self.order = tuple(order[v] for v in self.vars)
        self.total = total
        self.coeffs = {}
        for k, c in (coeffs or {}).items():
            if self._keep(k) and not c.is_zero():
                self.coeffs[k] = c

    def _keep(self, k) -> bool:
        if any(e > o for e, o in zip(k, self.order)):
            return False
        return self.total is None or sum(k) <= self.total

    def _new(self, coeffs):
        s = FormalSeries.__new__(FormalSeries)
        s.vars, s.order, s.total = self.vars, self.order, self.total
        s.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero() and self._keep(k)}
        return s

    @classmethod
    def from_poly(cls, p: Poly, vars, order, total=None) -> "FormalSeries":
        s = cls(vars, order, total)
        return s._new(p.coefficients(s.vars))

    def like(self, p) -> "FormalSeries":
        return FormalSeries.from_poly(Poly.coerce(p), self.vars, dict(zip(self.vars, self.order)), self.total)

    def one(self):
        return self._new({(0,) * len(self.vars): Poly.const(1)})

    def constant_term(self) -> Poly:
        return self.coeffs.get((0,) * len(self.vars), Poly.const(0))

    def coeff(self, exps) -> Poly:
        if isinstance(exps, dict):
            exps = tuple(exps.get(v, 0) for v in self.vars)
        return self.coeffs.get(tuple(exps), Poly.const(0))

    def to_poly(self) -> Poly:
        out = Poly.const(0)
        for k, c in self.coeffs.items():
            out = out + c * Poly.monomial(dict(zip(self.vars, k)))
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    # arithmetic -----------------------------------------------------------------------
    def _other(self, o):
        return o if isinstance(o, FormalSeries) else self.like(o)

    def __add__(self, o):
        o = self._other(o)
        out = dict(self.coeffs)
        for k, c in o.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, o):
        return self + (-self._other(o))

    def __rsub__(self, o):
        return self._other(o) - self

    def __mul__(self, o):
        if not isinstance(o, (FormalSeries, Poly)):
            return self._new({k: c * o for k, c in self.coeffs.items()})
        o = self._other(o)
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in o.coeffs.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                if not self._keep(k):
                    continue
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        if not isinstance(o, FormalSeries):
            o = self.like(o)
        return self.coeffs == o.coeffs

    def _max_power(self) -> int:
        return self.total if self.total is not None else sum(self.order)

    def _split(self, require=None):
        c0 = self.constant_term()
        u = self - self.like(c0)
        if require is not None and c0 != require:
            raise SeriesError(f"constant term must be {require}, got {c0}")
        return c0, u

    def _powers(self, u):
        p = self.one()
        for k in range(self._max_power() + 1):
            if p.is_zero():
                return
            yield k, p
            p = p * u

    def exp(self):
        _, u = self._split(require=0)
        out = self.one() * 0
        for k, p in self._powers(u):
            out = out + p * Fraction(1, factorial(k))
        return out

    def log(self):
        _, u = self._split(require=1)
        out = self.one() * 0
        for k, p in self._powers(u):
            if k:
                out = out + p * Fraction((-1) ** (k + 1), k)
        return out

    def pow(self, a) -> "FormalSeries":
        """``self ** a`` for a formal (polynomial) exponent; constant term must be 1."""
        if isinstance(a, int) and not isinstance(a, bool):
            return self ** a
        a = Poly.coerce(a)
        if a.is_constant() and a.scalar().is_real() and a.scalar().re.denominator == 1:
            return self ** int(a.scalar().re)
        _, u = self._split(require=1)
        out = self.one() * 0
        for k, p in self._powers(u):
            out = out + p * binomial_poly(a, k)
        return out

    def inverse(self) -> "FormalSeries":
        c0, u = self._split()
        try:
            inv0 = c0.inverse()
        except Exception as exc:
            raise SeriesError(f"constant term {c0} is not invertible") from exc
        v = u * inv0
        out = self.one() * 0
        for k, p in self._powers(v):
            out = out + p * ((-1) ** k)
        return out * inv0

    def __str__(self):
        return str(self.to_poly())


# expression trees -----------------------------------------------------------

class Expr:
    def __add__(self, o):
        return Add((self, _e(o)))

    def __radd__(self, o):
        return Add((_e(o), self))

    def __mul__(self, o):
        return Mul((self, _e(o)))

    def __rmul__(self, o):
        return Mul((_e(o), self))


@dataclass(frozen=True, eq=False)
class Rat(Expr):
    value: object  # Poly or RationalFn


@dataclass(frozen=True, eq=False)
class Add(Expr):
    args: tuple


@dataclass(frozen=True, eq=False)
class Mul(Expr):
    args: tuple


@dataclass(frozen=True, eq=False)
class Pow(Expr):
    base: Expr
    exponent: object  # int or Poly


@dataclass(frozen=True, eq=False)
class Exp(Expr):
    arg: Expr


@dataclass(frozen=True, eq=False)
class Log(Expr):
    arg: Expr


def _e(x):
    return x if isinstance(x, Expr) else Rat(x)


def series_expand(expr, vars, order=6, total=None) -> FormalSeries:
    """Expand an expression tree as a truncated series in ``vars``.

    >>> B2, V2 = Poly.var("B2"), Poly.var("V2")
    >>> s = series_expand(Pow(Rat(1 - B2 * V2), Poly.var("x") * -2), ["B2", "V2"], 2)
    >>> str(s.coeff((1, 1)))
    '2*x'
    """
    base = FormalSeries(vars, order, total)

    def go(e) -> FormalSeries:
        if not isinstance(e, Expr):
            e = Rat(e)
        if isinstance(e, Rat):
            v = e.value
            if isinstance(v, RationalFn):
                out = base.like(v.num)
                for f, k in v.den:
                    out = out * base.like(f).inverse() ** k
                return out
            return base.like(v)
        if isinstance(e, Add):
            out = base.one() * 0
            for a in e.args:
                out = out + go(a)
            return out
        if isinstance(e, Mul):
            out = base.one()
            for a in e.args:
                out = out * go(a)
            return out
        if isinstance(e, Pow):
            return go(e.base).pow(e.exponent)
        if isinstance(e, Exp):
            return go(e.arg).exp()
        if isinstance(e, Log):
            return go(e.arg).log()
        raise TypeError(f"unknown expression node {e!r}")

    return go(expr)


__all__ = ["FormalSeries", "SeriesError", "Expr", "Rat", "Add", "Mul", "Pow", "Exp", "Log", "series_expand", "ONE"]
