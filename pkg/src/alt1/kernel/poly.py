"""Sparse multivariate Laurent polynomials over Q(i).

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, so
variable sets extend automatically under arithmetic.  Negative exponents are
only legal for names listed in the polynomial's ``laurent`` set; the formal
exponential unit ``E`` (standing for e^{A4/2}) is just such a variable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb

from .scalar import ONE, ZERO, GaussQ, I, as_scalar

Monomial = tuple

_DISPLAY_ORDER = ["t", "r", "zeta", "M", "t1", "r1", "zeta1", "M1", "t2", "r2", "zeta2", "M2"]
_RANK = {v: i for i, v in enumerate(_DISPLAY_ORDER)}

PRETTY_NAMES = {
    "zeta": "ζ", "zeta1": "ζ₁", "zeta2": "ζ₂",
    "M": "ℳ", "M1": "ℳ₁", "M2": "ℳ₂",
    "gamma": "γ", "gamma1": "γ₁", "gamma2": "γ₂",
    "beta": "β", "lam": "λ",
    "x1": "x₁", "x2": "x₂", "t1": "t₁", "t2": "t₂", "r1": "r₁", "r2": "r₂",
    "cp": "c′",
}

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def var_key(name: str):
    """Sort key placing t, r, ζ, ℳ first and everything else alphabetically."""
    return (0, _RANK[name], "") if name in _RANK else (1, 0, name)


class LaurentError(ValueError):
    """Negative exponent requested for a variable not declared Laurent."""


class NotDivisible(ArithmeticError):
    pass


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    return _mono_mul(a, tuple((v, -e) for v, e in b))


def _check_mono(m: Monomial, laurent) -> None:
    for v, e in m:
        if e < 0 and v not in laurent:
            raise LaurentError(f"negative power of non-Laurent variable {v!r}")


class Poly:
    """Immutable sparse Laurent polynomial.

    >>> t = Poly.var("t"); r = Poly.var("r", laurent=True)
    >>> str((t + 1) * (t - 1))
    't^2 - 1'
    >>> str(r ** -1 * r)
    '1'
    """

    __slots__ = ("terms", "laurent", "_hash")

    def __init__(self, terms=None, laurent=frozenset()):
        self.terms = terms if terms is not None else {}
        self.laurent = laurent
        self._hash = None

    # constructors ---------------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        c = as_scalar(c)
        return cls({(): c} if c else {})

    @classmethod
    def var(cls, name: str, laurent: bool = False) -> "Poly":
        return cls({((name, 1),): ONE}, frozenset([name]) if laurent else frozenset())

    @classmethod
    def monomial(cls, exps: dict, coeff=1, laurent=()) -> "Poly":
        laurent = frozenset(laurent)
        m = tuple(sorted((v, e) for v, e in exps.items() if e))
        _check_mono(m, laurent)
        c = as_scalar(coeff)
        return cls({m: c} if c else {}, laurent)

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    @classmethod
    def from_terms(cls, items, laurent=()) -> "Poly":
        """Build from ``(exponent dict, coefficient)`` pairs."""
        laurent = frozenset(laurent)
        out = {}
        for exps, c in items:
            m = tuple(sorted((v, e) for v, e in exps.items() if e))
            _check_mono(m, laurent)
            out[m] = out.get(m, ZERO) + as_scalar(c)
        return cls({m: c for m, c in out.items() if c}, laurent)

    # basic queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_term(self) -> GaussQ:
        return self.terms.get((), ZERO)

    def scalar(self) -> GaussQ:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.constant_term()

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self, var: str) -> int:
        return max((dict(m).get(var, 0) for m in self.terms), default=0)

    def min_degree(self, var: str) -> int:
        return min((dict(m).get(var, 0) for m in self.terms), default=0)

    def total_degree(self, names=None) -> int:
        def deg(m):
            return sum(e for v, e in m if names is None or v in names)
        return max((deg(m) for m in self.terms), default=0)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    # arithmetic ------------------------------------------------------------------
    def _with(self, terms, other_laurent=frozenset()):
        lau = self.laurent | other_laurent if other_laurent else self.laurent
        return Poly(terms, lau)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = _maybe_const(other)
            if other is NotImplemented:
                return other
        if not other.terms:
            return self if other.laurent <= self.laurent else self._with(self.terms, other.laurent)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return self._with(out, other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = _maybe_const(other)
            if other is NotImplemented:
                return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = as_scalar(c)
        if not c:
            return Poly({}, self.laurent)
        return Poly({m: v * c for m, v in self.terms.items()}, self.laurent)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _maybe_scalar(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = _mono_mul(m1, m2)
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return self._with({m: c for m, c in out.items() if c}, other.laurent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a scalar or, exactly, by a polynomial."""
        if isinstance(other, Poly):
            return self.divexact(other)
        c = _maybe_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(ONE / c)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Poly({(): ONE}, self.laurent)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Poly":
        """Inverse of a unit: a nonzero scalar times a Laurent monomial."""
        if len(self.terms) != 1:
            raise NotDivisible(f"{self} is not a unit")
        (m, c), = self.terms.items()
        inv = tuple((v, -e) for v, e in m)
        _check_mono(inv, self.laurent)
        return Poly({inv: ONE / c}, self.laurent)

    # comparison ---------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        c = _maybe_scalar(other)
        if c is NotImplemented:
            return NotImplemented
        if not c:
            return not self.terms
        return len(self.terms) == 1 and self.terms.get(()) == c

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # calculus and substitution --------------------------------------------------
    def diff(self, var: str, k: int = 1) -> "Poly":
        p = self
        for _ in range(k):
            out = {}
            for m, c in p.terms.items():
                d = dict(m)
                e = d.get(var, 0)
                if not e:
                    continue
                if e == 1:
                    del d[var]
                else:
                    d[var] = e - 1
                nm = tuple(sorted(d.items()))
                out[nm] = out.get(nm, ZERO) + c * e
            p = Poly({m: c for m, c in out.items() if c}, p.laurent)
        return p

    def subs(self, mapping: dict) -> "Poly":
        """Substitute polynomials (or scalars) for variables."""
        mapping = {k: Poly.coerce(v) for k, v in mapping.items()}
        extra = reduce(lambda a, b: a | b, (v.laurent for v in mapping.values()), frozenset())
        cache = {}
        out = Poly({}, self.laurent | extra)
        for m, c in self.terms.items():
            keep = []
            factor = Poly({(): c}, out.laurent)
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = mapping[v] ** e
                    factor = factor * cache[key]
                else:
                    keep.append((v, e))
            if keep:
                factor = factor * Poly({tuple(keep): ONE}, self.laurent)
            out = out + factor
        return out

    def evaluate(self, values: dict):
        """Numeric value; exact if every supplied value is exact."""
        exact = all(isinstance(v, (int, Fraction, GaussQ)) for v in values.values())
        total = ZERO if exact else 0
        for m, c in self.terms.items():
            term = c if exact else complex(c)
            for v, e in m:
                if v not in values:
                    raise KeyError(f"no value for variable {v!r}")
                val = values[v]
                if exact:
                    val = as_scalar(val)
                term = term * (val ** e)
            total = total + term
        return total

    def coefficients(self, names) -> dict:
        """Split into ``{exponent tuple over names: Poly in remaining variables}``."""
        names = tuple(names)
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            key = tuple(d.pop(v, 0) for v in names)
            rest = tuple(sorted(d.items()))
            bucket = out.setdefault(key, {})
            bucket[rest] = bucket.get(rest, ZERO) + c
        return {k: Poly({m: c for m, c in b.items() if c}, self.laurent) for k, b in out.items()}

    def coeff(self, var: str, k: int) -> "Poly":
        return self.coefficients([var]).get((k,), Poly({}, self.laurent))

    def conjugate(self) -> "Poly":
        return Poly({m: c.conjugate() for m, c in self.terms.items()}, self.laurent)

    # exact division ---------------------------------------------------------------
    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term (per-variable minimum exponent)."""
        if not self.terms:
            return ()
        names = self.variables()
        mins = {v: min(dict(m).get(v, 0) for m in self.terms) for v in names}
        return tuple(sorted((v, e) for v, e in mins.items() if e))

    def divexact(self, d: "Poly") -> "Poly":
        """Exact quotient ``self / d``; raises :class:`NotDivisible` otherwise."""
        d = Poly.coerce(d)
        if not d.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return self
        laurent = self.laurent | d.laurent
        if len(d.terms) == 1:
            (dm, dc), = d.terms.items()
            out = {}
            for m, c in self.terms.items():
                nm = _mono_div(m, dm)
                for v, e in nm:
                    if e < 0 and v not in laurent:
                        raise NotDivisible(f"{self} / {d}")
                out[nm] = c / dc
            return Poly(out, laurent)
        # shift Laurent variables so that both sides are honest polynomials
        shift_p = tuple((v, -e) for v, e in self.monomial_content() if v in laurent and e < 0)
        content_d = tuple((v, -e) for v, e in d.monomial_content() if v in laurent)
        p = Poly({_mono_mul(m, shift_p): c for m, c in self.terms.items()}, laurent)
        dd = Poly({_mono_mul(m, content_d): c for m, c in d.terms.items()}, laurent)
        names = sorted(p.variables() | dd.variables())

        def key(m):
            dm = dict(m)
            return tuple(dm.get(v, 0) for v in names)

        lm_d = max(dd.terms, key=key)
        lc_d = dd.terms[lm_d]
        lm_d_d = dict(lm_d)
        q = {}
        rem = dict(p.terms)
        while rem:
            lm = max(rem, key=key)
            lmd = dict(lm)
            if any(lmd.get(v, 0) < e for v, e in lm_d_d.items()) or any(
                e < 0 and lm_d_d.get(v, 0) == 0 for v, e in lmd.items() if v not in laurent
            ):
                raise NotDivisible(f"{self} / {d}")
            qm = _mono_div(lm, lm_d)
            qc = rem[lm] / lc_d
            q[qm] = q.get(qm, ZERO) + qc
            for m, c in dd.terms.items():
                mm = _mono_mul(m, qm)
                s = rem.get(mm, ZERO) - c * qc
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        quot = Poly({m: c for m, c in q.items() if c}, laurent)
        # undo the shifts: self = quot * dd / shift_p, d = dd / content_d
        undo = _mono_mul(content_d, tuple((v, -e) for v, e in shift_p))
        return Poly({_mono_mul(m, undo): c for m, c in quot.terms.items()}, laurent)

    def divides(self, other: "Poly") -> bool:
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    # display -------------------------------------------------------------------
    def sorted_terms(self):
        names = sorted(self.variables(), key=var_key)

        def key(item):
            m = dict(item[0])
            exps = [m.get(v, 0) for v in names]
            return (-sum(exps), [-e for e in exps])

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        return self.format(pretty=False)

    def __repr__(self):
        return f"Poly({self})"

    def format(self, pretty: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = format_monomial(m, pretty)
            parts.append(_join_coeff(c, mono, pretty))
        return join_signed(parts, pretty)

    def pretty(self) -> str:
        return self.format(pretty=True)

    def to_python(self, names: dict) -> str:
        """Python source evaluating this polynomial; ``names`` maps variables to identifiers."""
        if not self.terms:
            return "0"
        out = []
        for m, c in self.terms.items():
            factors = [repr(complex(c)) if not c.is_real() else repr(float(c.re))]
            for v, e in m:
                factors.append(f"{names[v]}**{e}" if e != 1 else names[v])
            out.append("*".join(factors))
        return "(" + " + ".join(out) + ")"


def _maybe_const(x):
    c = _maybe_scalar(x)
    if c is NotImplemented:
        return c
    return Poly({(): c} if c else {})


def _maybe_scalar(x):
    try:
        return as_scalar(x)
    except TypeError:
        return NotImplemented


def format_monomial(m: Monomial, pretty: bool = False) -> str:
    items = sorted(m, key=lambda ve: var_key(ve[0]))
    if pretty:
        return "".join(PRETTY_NAMES.get(v, v) + (str(e).translate(_SUP) if e != 1 else "") for v, e in items)
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in items)


def format_scalar(c: GaussQ, pretty: bool) -> str:
    if pretty:
        return str(c).replace("I", "𝕚")
    return str(c)


def scalar_prefix(c: GaussQ, pretty: bool) -> str:
    """String to put in front of a non-empty factor: '', '-', '2*', '(1/2)', ..."""
    if c == 1:
        return ""
    if c == -1:
        return "-"
    sign = ""
    if c.is_real() and c.re < 0 or not c.is_real() and not c.re and c.im < 0:
        sign, c = "-", -c
    s = format_scalar(c, pretty)
    if pretty and (c.re.denominator != 1 or c.im.denominator != 1) and not s.startswith("("):
        s = f"({s})"
    return sign + s + ("" if pretty else "*")


def _join_coeff(c: GaussQ, mono: str, pretty: bool) -> str:
    if not mono:
        return format_scalar(c, pretty)
    return scalar_prefix(c, pretty) + mono


def join_signed(parts, pretty=False) -> str:
    minus = "−" if pretty else "-"
    s = parts[0]
    if s.startswith("-"):
        s = minus + s[1:]
    for p in parts[1:]:
        if p.startswith("-"):
            s += f" {minus} " + p[1:]
        else:
            s += " + " + p
    return s


def binomial_poly(a: Poly, k: int) -> Poly:
    """Generalised binomial coefficient C(a, k) as a polynomial in ``a``."""
    out = Poly.const(1)
    for i in range(k):
        out = out * (a - i)
    return out.scale(Fraction(1, _factorial(k)))


def falling(a: Poly, k: int) -> Poly:
    out = Poly.const(1)
    for i in range(k):
        out = out * (a - i)
    return out


def _factorial(k: int) -> int:
    f = 1
    for i in range(2, k + 1):
        f *= i
    return f


def symbols(*names, laurent=False):
    return tuple(Poly.var(n, laurent=laurent) for n in names)


IU = Poly.const(I)
__all__ = [
    "Poly", "LaurentError", "NotDivisible", "binomial_poly", "falling", "symbols",
    "var_key", "format_monomial", "join_signed", "comb", "IU",
]
