"""Wick products and Appell polynomials over formal (or numeric) moments."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .kernel import Poly
from .kernel.scalar import GaussQ

X = Poly.var("x")


class MomentSequence:
    """Moments m_1, m_2, ... of one variable, plus optional joint moments.

    Missing single moments are formal parameters ``m<g>`` unless the sequence
    is numeric (``formal=False``), in which case asking for too many raises.
    Joint moments E[X_i X_j ...] default to formal ``E[i,j,...]`` symbols.
    """

    def __init__(self, moments=None, joint=None, formal=None):
        self.moments = [GaussQ.parse(m) if isinstance(m, str) else m for m in (moments or [])]
        self.joint = {tuple(sorted(k)): (GaussQ.parse(v) if isinstance(v, str) else v)
                      for k, v in (joint or {}).items()}
        self.formal = (moments is None) if formal is None else formal

    @classmethod
    def gaussian(cls, n: int) -> "MomentSequence":
        ms = []
        for g in range(1, n + 1):
            if g % 2:
                ms.append(0)
            else:
                df = 1
                for i in range(g - 1, 0, -2):
                    df *= i
                ms.append(df)
        return cls(ms, formal=False)

    @classmethod
    def centered(cls) -> "MomentSequence":
        """Formal moments with m1 = 0."""
        return cls([0], formal=True)

    def m(self, g: int) -> Poly:
        if g == 0:
            return Poly.const(1)
        if g <= len(self.moments):
            return Poly.coerce(self.moments[g - 1])
        if self.formal:
            return Poly.var(f"m{g}")
        raise ValueError(f"moment m{g} not available (only {len(self.moments)} given)")

    def joint_moment(self, labels) -> Poly:
        key = tuple(sorted(labels))
        if not key:
            return Poly.const(1)
        if key in self.joint:
            return Poly.coerce(self.joint[key])
        if len(set(key)) == 1 and key[0] == "X":
            return self.m(len(key))
        if self.formal or not self.moments:
            return Poly.var("E[" + ",".join(str(i) for i in key) + "]")
        raise ValueError(f"joint moment {key} not available")

    def expectation(self, p: Poly, var: str = "x") -> Poly:
        """E p(X) for a polynomial in one variable."""
        out = Poly.const(0)
        for (g,), c in p.coefficients([var]).items():
            out = out + c * self.m(g)
        return out


@dataclass
class WickPolynomial:
    k: int
    labels: tuple
    coeffs: dict  # frozenset of positions -> Poly
    consistent: bool = True
    moments: MomentSequence = field(default=None, repr=False)

    def as_poly(self, names=None) -> Poly:
        names = names or [f"x{i}" for i in range(1, self.k + 1)]
        out = Poly.const(0)
        for S, c in self.coeffs.items():
            term = c
            for p in S:
                term = term * Poly.var(names[p - 1])
            out = out + term
        return out

    def expectation(self) -> Poly:
        out = Poly.const(0)
        for S, c in self.coeffs.items():
            out = out + c * self.moments.joint_moment([self.labels[p - 1] for p in S])
        return out


def wick_product(k: int, moments: MomentSequence | None = None, labels=None) -> WickPolynomial:
    """<X_{l1}, ..., X_{lk}> as a multilinear polynomial in x1..xk.

    Coefficients of non-empty monomials are inherited from smaller Wick
    products through the derivative rule; the constant fixes E<...> = 0.
    ``labels`` names the random variable at each position (default 1..k).
    """
    moments = moments or MomentSequence()
    labels = tuple(labels) if labels is not None else tuple(range(1, k + 1))
    if len(labels) != k:
        raise ValueError("need one label per position")
    memo = {}
    ok = [True]

    def build(P: frozenset) -> dict:
        if P in memo:
            return memo[P]
        out = {}
        for r in range(len(P), 0, -1):
            for S in combinations(sorted(P), r):
                S = frozenset(S)
                vals = []
                for i in sorted(S):
                    vals.append(build(P - {i}).get(S - {i}, Poly.const(0)))
                if any(v != vals[0] for v in vals[1:]):
                    ok[0] = False
                if not vals[0].is_zero():
                    out[S] = vals[0]
        const = Poly.const(0)
        for S, c in out.items():
            const = const - c * moments.joint_moment([labels[p - 1] for p in S])
        if not const.is_zero() or not P:
            out[frozenset()] = const if P else Poly.const(1)
        memo[P] = out
        return out

    coeffs = build(frozenset(range(1, k + 1)))
    return WickPolynomial(k, labels, coeffs, ok[0], moments)


def appell_polynomials(n_max: int, moments: MomentSequence | None = None) -> list:
    """P_0..P_{n_max}: P_n' = n P_{n-1} and E P_n(X) = 0."""
    moments = moments or MomentSequence()
    out = [Poly.const(1)]
    for n in range(1, n_max + 1):
        prim = Poly.const(0)
        for (g,), c in out[-1].coefficients(["x"]).items():
            prim = prim + c * X ** (g + 1) * Fraction(n, g + 1)
        out.append(prim - moments.expectation(prim))
    return out


def appell_from_wick(n: int, moments: MomentSequence | None = None) -> Poly:
    """P_n as the Wick product <X, ..., X> with all positions set equal."""
    moments = moments or MomentSequence()
    w = wick_product(n, moments, labels=["X"] * n)
    return w.as_poly(["x"] * n)


def appell_conditions(polys, moments: MomentSequence) -> list:
    """Indices n where P_n fails monic degree n, P_n' = n P_{n-1} or E P_n = 0."""
    bad = []
    for n, p in enumerate(polys):
        if p.degree("x") != n or p.coeff("x", n) != 1:
            bad.append((n, "degree"))
        if n and p.diff("x") != polys[n - 1] * n:
            bad.append((n, "derivative"))
        if n and not moments.expectation(p).is_zero():
            bad.append((n, "expectation"))
    return bad


def shifted_moment_system(n_max: int, mu: MomentSequence | None = None) -> list:
    """P_n(x) = integral (x + y)^n mu(dy) = sum_g C(n, g) x^(n-g) mu_g."""
    mu = mu or MomentSequence()
    if mu.formal and not mu.moments:
        get = lambda g: Poly.const(1) if g == 0 else Poly.var(f"mu{g}")
    else:
        get = mu.m
    return [sum((X ** (n - g) * get(g) * comb(n, g) for g in range(n + 1)), Poly.const(0))
            for n in range(n_max + 1)]


def hermite_e(n_max: int) -> list:
    """Probabilists' Hermite polynomials by the three-term recursion."""
    out = [Poly.const(1), X]
    for n in range(1, n_max):
        out.append(X * out[n] - out[n - 1] * n)
    return out[: n_max + 1]


@dataclass
class HermiteReport:
    polynomials: list
    mismatches: list


def hermite_check(n_max: int = 8) -> HermiteReport:
    ps = appell_polynomials(n_max, MomentSequence.gaussian(n_max))
    he = hermite_e(n_max)
    return HermiteReport(ps, [n for n in range(n_max + 1) if ps[n] != he[n]])


def _m(g):
    return Poly.var(f"m{g}")


PRINTED_EXAMPLE2 = [
    Poly.const(1),
    X,
    X ** 2 - _m(2),
    X ** 3 - _m(3) - _m(2) * X * 3,
    X ** 4 - _m(2) * X ** 3 * 10 - _m(3) * X ** 2 * 10 + X * (_m(2) ** 2 * 6 - _m(4)) * 5,
    X ** 5 - _m(2) * X ** 3 * 10 - _m(3) * X ** 2 * 10 + X * (_m(2) ** 2 * 6 - _m(4)) * 5 + _m(2) * _m(3) * 20 - _m(5),
]


@dataclass
class Example2Report:
    derived: list
    matches: list  # indices where printed == derived
    discrepancies: list  # (n, printed, derived)


def example2_check() -> Example2Report:
    derived = appell_polynomials(5, MomentSequence.centered())
    match, disc = [], []
    for n, p in enumerate(PRINTED_EXAMPLE2):
        if p == derived[n]:
            match.append(n)
        else:
            disc.append((n, str(p), str(derived[n])))
    return Example2Report(derived, match, disc)


def load_moments(path) -> MomentSequence:
    """Read {"moments": [...], "joint": [{"indices": [...], "value": "..."}]}."""
    with open(path) as fh:
        data = json.load(fh)
    if "moments" not in data or not isinstance(data["moments"], list):
        raise ValueError("moment file needs a 'moments' list")
    for v in data["moments"]:
        if not isinstance(v, str):
            raise ValueError("moments must be exact rational strings")
    joint = {}
    for item in data.get("joint", []):
        joint[tuple(item["indices"])] = item["value"]
    return MomentSequence(data["moments"], joint, formal=False)


__all__ = [
    "MomentSequence", "WickPolynomial", "wick_product", "appell_polynomials", "appell_from_wick",
    "appell_conditions", "shifted_moment_system", "hermite_e", "hermite_check", "HermiteReport",
    "PRINTED_EXAMPLE2", "example2_check", "Example2Report", "load_moments",
]
