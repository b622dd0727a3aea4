"""Rational functions with a factored denominator.

Denominators are kept as products of normalised factors raised to positive
multiplicities; this avoids multivariate gcds altogether.  A factor is
cancelled whenever exact division succeeds.  Equality is decided by
cross-multiplication, which is always sound.
"""

from __future__ import annotations

from .poly import NotDivisible, Poly, join_signed
from .scalar import ONE, as_scalar


def _normalise(f: Poly):
    """Split ``f`` into (scalar, monic factor) using its largest term."""
    (m, c) = f.sorted_terms()[0]
    if c == ONE:
        return ONE, f
    return c, f.scale(ONE / c)


class RationalFn:
    """``num / prod(f**k for f, k in den)``.

    >>> x = Poly.var("x")
    >>> r = RationalFn(x * x - 1, x - 1)
    >>> str(r)
    'x + 1'
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly.coerce(num)
        self.den = ()
        if den is None:
            self.num = num
            return
        if isinstance(den, tuple):
            self.num = num
            self.den = den
            return
        den = Poly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        r = RationalFn(num)._div_poly(den)
        self.num, self.den = r.num, r.den

    @classmethod
    def coerce(cls, x) -> "RationalFn":
        return x if isinstance(x, RationalFn) else cls(x)

    # internals -------------------------------------------------------------------
    def _div_poly(self, d: Poly, mult: int = 1) -> "RationalFn":
        if d.is_monomial() and all(e >= 0 for _, e in next(iter(d.terms))) and not next(iter(d.terms)):
            return RationalFn(self.num.scale(ONE / d.constant_term()) if mult == 1
                              else self.num.scale(ONE / d.constant_term() ** mult), self.den)
        if d.is_constant():
            return RationalFn(self.num.scale(ONE / d.constant_term() ** mult), self.den)
        if d.is_monomial():
            try:
                return RationalFn(self.num.divexact(d ** mult), self.den)
            except Exception:
                pass
        c, f = _normalise(d)
        num = self.num.scale(ONE / c ** mult)
        den = dict(self.den)
        # cancel against the numerator as far as possible
        while mult and not num.is_zero():
            try:
                num = num.divexact(f)
            except NotDivisible:
                break
            mult -= 1
        if mult:
            den[f] = den.get(f, 0) + mult
        if num.is_zero():
            den = {}
        return RationalFn(num, tuple(sorted(den.items(), key=lambda kv: str(kv[0]))))

    def denominator(self) -> Poly:
        out = Poly.const(1)
        for f, k in self.den:
            out = out * f ** k
        return out

    # arithmetic -----------------------------------------------------------------
    def __add__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        if not other.den and not self.den:
            return RationalFn(self.num + other.num)
        d1, d2 = dict(self.den), dict(other.den)
        common = {f: max(d1.get(f, 0), d2.get(f, 0)) for f in set(d1) | set(d2)}
        n1 = self.num
        for f, k in common.items():
            if k - d1.get(f, 0):
                n1 = n1 * f ** (k - d1.get(f, 0))
        n2 = other.num
        for f, k in common.items():
            if k - d2.get(f, 0):
                n2 = n2 * f ** (k - d2.get(f, 0))
        return RationalFn(n1 + n2, ())._reduce_with(common)

    __radd__ = __add__

    def _reduce_with(self, den: dict) -> "RationalFn":
        num = self.num
        if num.is_zero():
            return RationalFn(num)
        out = {}
        for f, k in den.items():
            while k:
                try:
                    num = num.divexact(f)
                except NotDivisible:
                    break
                k -= 1
            if k:
                out[f] = k
        return RationalFn(num, tuple(sorted(out.items(), key=lambda kv: str(kv[0]))))

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        r = RationalFn(self.num * other.num, ())
        den = dict(self.den)
        for f, k in other.den:
            den[f] = den.get(f, 0) + k
        return r._reduce_with(den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        r = self
        for f, k in other.den:
            r = r * RationalFn(f ** k)
        return r._div_poly(other.num)

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFn(1) / self ** (-n)
        out = RationalFn(1)
        for _ in range(n):
            out = out * self
        return out

    # queries ------------------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> Poly:
        if self.den:
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        other = _rf(other)
        if other is NotImplemented:
            return other
        return rational_eq(self, other)

    def __hash__(self):
        if not self.den:
            return hash(self.num)
        return hash((self.num, self.den))

    def diff(self, var: str) -> "RationalFn":
        out = RationalFn(self.num.diff(var), self.den)
        for f, k in self.den:
            df = f.diff(var)
            if df.is_zero():
                continue
            den = dict(self.den)
            den[f] = den[f] + 1
            out = out + RationalFn(self.num * df.scale(-k), tuple(sorted(den.items(), key=lambda kv: str(kv[0]))))
        return out

    def subs(self, mapping: dict) -> "RationalFn":
        rmap = {k: v for k, v in mapping.items() if isinstance(v, RationalFn)}
        pmap = {k: v for k, v in mapping.items() if not isinstance(v, RationalFn)}
        if rmap:
            return _subs_rational(self, pmap, rmap)
        out = RationalFn(self.num.subs(pmap))
        for f, k in self.den:
            out = out._div_poly(f.subs(pmap), k)
        return out

    def evaluate(self, values: dict):
        d = 1
        for f, k in self.den:
            d = d * f.evaluate(values) ** k
        return self.num.evaluate(values) / d

    def variables(self) -> set:
        out = self.num.variables()
        for f, _ in self.den:
            out |= f.variables()
        return out

    def __str__(self):
        return self.format(False)

    def __repr__(self):
        return f"RationalFn({self})"

    def format(self, pretty: bool = False) -> str:
        if not self.den:
            return self.num.format(pretty)
        parts = []
        for f, k in self.den:
            s = f.format(pretty)
            s = s if f.is_monomial() else f"({s})"
            parts.append(s if k == 1 else f"{s}^{k}")
        n = self.num.format(pretty)
        if len(self.num) > 1:
            n = f"({n})"
        return f"{n}/{'*'.join(parts) if len(parts) == 1 else '(' + '*'.join(parts) + ')'}"

    def pretty(self) -> str:
        return self.format(True)


def _rf(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, Poly):
        return RationalFn(x)
    try:
        return RationalFn(Poly.const(as_scalar(x)))
    except TypeError:
        return NotImplemented


def _subs_rational(r: RationalFn, pmap, rmap) -> RationalFn:
    def sub_poly(p: Poly) -> RationalFn:
        out = RationalFn(0)
        for m, c in p.terms.items():
            term = RationalFn(Poly({(): c}))
            rest = []
            for v, e in m:
                if v in rmap:
                    term = term * rmap[v] ** e
                elif v in pmap:
                    term = term * RationalFn(Poly.coerce(pmap[v]) ** e)
                else:
                    rest.append((v, e))
            if rest:
                term = term * RationalFn(Poly({tuple(rest): ONE}, p.laurent))
            out = out + term
        return out

    out = sub_poly(r.num)
    for f, k in r.den:
        out = out / sub_poly(f) ** k
    return out


def rational_eq(lhs, rhs) -> bool:
    """Decide ``lhs == rhs`` by cross-multiplication."""
    lhs, rhs = RationalFn.coerce(lhs), RationalFn.coerce(rhs)
    for f, k in lhs.den + rhs.den:
        if f.is_zero():
            raise ZeroDivisionError("zero denominator")
    if not lhs.den and not rhs.den:
        return lhs.num == rhs.num
    return lhs.num * rhs.denominator() == rhs.num * lhs.denominator()


__all__ = ["RationalFn", "rational_eq", "join_signed"]
