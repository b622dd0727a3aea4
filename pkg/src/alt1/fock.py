"""Fock space of the canonical Appell system, Leibniz function and the
two-mode bosonic realization.

Everything is derived from one closed form, the Leibniz function

    Y(B, V) = (1 - B2 V2)^(-2x) exp(2 gamma (B1 V2 + B2 V1) / (1 - B2 V2)).

Lowering operators are read off as differential operators in V (first-order
PDEs satisfied by Y), ladder rules come from letting those operators act on
the generating function sum V1^j V2^k/(j! k!) |jk>, and the bosonic words are
their transposes (V -> annihilation, d/dV -> creation).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .diffop import DiffOp
from .kernel import Exp, Mul, Poly, Pow, Rat, RationalFn, rational_eq, series_expand, solve_linear
from .kernel.poly import falling
from .liealg import ALT1_BASIS, make_alt1

x, gamma, beta = Poly.var("x"), Poly.var("gamma"), Poly.var("beta")
j, k = Poly.var("j"), Poly.var("k")
V1, V2, B1, B2 = Poly.var("V1"), Poly.var("V2"), Poly.var("B1"), Poly.var("B2")
z1, z2 = Poly.var("z1"), Poly.var("z2")
y1, y2, v1, v2 = Poly.var("y1"), Poly.var("y2"), Poly.var("v1"), Poly.var("v2")

_w = 1 - B2 * V2
_u = B1 * V2 + B2 * V1


# Leibniz function ---------------------------------------------------------------------

def leibniz_expr():
    return Mul((Pow(Rat(_w), x * -2), Exp(Rat(RationalFn(_u * gamma * 2, _w)))))


def dlog_leibniz(var: str) -> RationalFn:
    """Logarithmic derivative of the Leibniz function (a rational function)."""
    return RationalFn(x * -2 * _w.diff(var), _w) + RationalFn(_u * gamma * 2, _w).diff(var)


def _rising(a: Poly, n: int) -> Poly:
    out = Poly.const(1)
    for i in range(n):
        out = out * (a + i)
    return out


def leibniz_coefficient(jb: int, kb: int, jv: int, kv: int) -> Poly:
    """Coefficient of B1^jb B2^kb V1^jv V2^kv in the Leibniz function.

    Expanding exp(2 gamma u/w) w^(-2x) = sum_n (2 gamma)^n u^n w^(-2x-n)/n!
    forces n = jb + jv and a B2 V2 power l = kb - jv = kv - jb.
    """
    n = jb + jv
    l = kb - jv
    if l < 0 or l != kv - jb:
        return Poly.const(0)
    c = Fraction(1, factorial(n) * factorial(l)) * Fraction(factorial(n), factorial(jb) * factorial(jv))
    return (gamma * 2) ** n * _rising(x * 2 + n, l) * c


def leibniz_series(order: int = 4):
    """Closed form expanded with each variable to ``order`` (total 2*order)."""
    return series_expand(leibniz_expr(), ["B1", "B2", "V1", "V2"], order, total=2 * order)


# PDEs satisfied by the Leibniz function ------------------------------------------------

def _monos(vars, deg):
    out = []
    for d in range(deg + 1):
        for e in itertools.product(range(d + 1), repeat=len(vars)):
            if sum(e) == d:
                m = Poly.const(1)
                for v, p in zip(vars, e):
                    m = m * Poly.var(v) ** p
                out.append(m)
    return out


def derive_pde(bvar: str, max_degree: int = 2) -> DiffOp:
    """The unique operator p1 dV1 + p2 dV2 + q with d_{B} Y = (...) Y.

    p1, p2 range over polynomials in V of degree <= max_degree, q over degree
    <= max_degree - 1, with coefficients in Q(x, gamma).
    """
    monos = _monos(["V1", "V2"], max_degree)
    qmonos = _monos(["V1", "V2"], max_degree - 1)
    d1, d2 = dlog_leibniz("V1"), dlog_leibniz("V2")
    target = dlog_leibniz(bvar)
    W = RationalFn(_w ** 3)
    cols = [m * d1 for m in monos] + [m * d2 for m in monos] + [RationalFn(m) for m in qmonos]
    polys = [(c * W).as_poly() for c in cols]
    rhs = (target * W).as_poly()
    names = ["B1", "B2", "V1", "V2"]
    keys = set(rhs.coefficients(names))
    coeff_maps = [p.coefficients(names) for p in polys]
    for cm in coeff_maps:
        keys |= set(cm)
    zero = Poly.const(0)
    rows = [[cm.get(key, zero) for cm in coeff_maps] for key in sorted(keys)]
    b = [rhs.coefficients(names).get(key, zero) for key in sorted(keys)]
    sol = solve_linear(rows, b)
    if sol.status != "solution":
        raise ValueError(f"PDE ansatz for {bvar} is {sol.status}")
    vals = [v if isinstance(v, Poly) else (v.as_poly() if isinstance(v, RationalFn) else Poly.const(v))
            for v in sol.particular]
    n = len(monos)
    p1 = sum((m * c for m, c in zip(monos, vals[:n])), Poly.const(0))
    p2 = sum((m * c for m, c in zip(monos, vals[n:2 * n])), Poly.const(0))
    q = sum((m * c for m, c in zip(qmonos, vals[2 * n:])), Poly.const(0))
    return DiffOp.mul(p1) * DiffOp.d("V1") + DiffOp.mul(p2) * DiffOp.d("V2") + DiffOp.mul(q)


PRINTED_DETLF = {
    "B1": DiffOp.mul(V2 ** 2) * DiffOp.d("V1") + DiffOp.mul(gamma * V2 * 2),
    "B2": DiffOp.mul(V2 ** 2) * DiffOp.d("V2") + DiffOp.mul(V1 * V2) * DiffOp.d("V1")
    + DiffOp.mul(x * V2 * 2 + gamma * V1 * 2),
}


def pde_holds(op: DiffOp, bvar: str) -> bool:
    """Does d_B Y = op Y hold identically (checked on logarithmic derivatives)?"""
    acc = RationalFn(op.zeroth_order())
    for d, c in op.terms.items():
        if not d:
            continue
        if len(d) != 1 or d[0][1] != 1:
            raise ValueError("only first-order operators are supported")
        acc = acc + RationalFn(c) * dlog_leibniz(d[0][0])
    return rational_eq(acc, dlog_leibniz(bvar))


@dataclass
class DetlfReport:
    derived: dict
    printed_holds: dict
    discrepancies: list  # (bvar, printed, derived)


def detlf_check() -> DetlfReport:
    derived = {b: derive_pde(b) for b in ("B1", "B2")}
    holds = {b: pde_holds(PRINTED_DETLF[b], b) for b in ("B1", "B2")}
    disc = [(b, PRINTED_DETLF[b].format(), derived[b].format()) for b in ("B1", "B2") if not holds[b]]
    return DetlfReport(derived, holds, disc)


def v_operators() -> dict:
    """Each generator as an operator in V acting on the coherent state Psi_V.

    The assignment is an anti-homomorphism: D_[A,B] = [D_B, D_A].
    """
    ops = {"Y1": DiffOp.d("V1"), "X1": DiffOp.d("V2"), "Y-1": derive_pde("B1"), "X-1": derive_pde("B2")}
    ops["Y0"] = ops["Y-1"].commutator(ops["X1"]) * Fraction(1, 2)  # [X1, Y-1] = 2 Y0
    ops["X0"] = ops["X-1"].commutator(ops["X1"]) * Fraction(1, 2)  # [X1, X-1] = 2 X0
    return ops


# ladder actions ------------------------------------------------------------------------

class FockVector:
    """Finite combination of |j k>; coefficients are Polys."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for key, c in (coeffs or {}).items():
            c = Poly.coerce(c)
            if not c.is_zero():
                self.coeffs[key] = c

    @classmethod
    def basis(cls, jj: int, kk: int) -> "FockVector":
        return cls({(jj, kk): 1})

    def __add__(self, o):
        out = dict(self.coeffs)
        for key, c in o.coeffs.items():
            out[key] = out.get(key, Poly.const(0)) + c
        return FockVector(out)

    def __sub__(self, o):
        return self + o * -1

    def __mul__(self, c):
        return FockVector({key: v * c for key, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, FockVector) and (self - o).coeffs == {}

    def coeff(self, jj, kk) -> Poly:
        return self.coeffs.get((jj, kk), Poly.const(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})|{a},{b}>" for (a, b), c in sorted(self.coeffs.items()))

    __repr__ = __str__


OMEGA = FockVector.basis(0, 0)


class LadderAction:
    """Rules gen -> {(dj, dk): coefficient polynomial in j, k, gamma, x}."""

    def __init__(self, rules: dict, name: str = ""):
        self.name = name
        self.rules = {g: {s: c for s, c in r.items() if not c.is_zero()} for g, r in rules.items()}

    def act(self, gen: str, vec: FockVector) -> FockVector:
        out = {}
        for (a, b), c in vec.coeffs.items():
            for (dj, dk), rc in self.rules[gen].items():
                val = rc.subs({"j": a, "k": b})
                if val.is_zero():
                    continue
                key = (a + dj, b + dk)
                if key[0] < 0 or key[1] < 0:
                    raise ValueError(f"{gen} maps |{a},{b}> outside the Fock space")
                out[key] = out.get(key, Poly.const(0)) + val * c
        return FockVector(out)

    def word(self, gens, vec: FockVector) -> FockVector:
        """Apply gens[0] gens[1] ... gens[-1] (rightmost first)."""
        for g in reversed(gens):
            vec = self.act(g, vec)
        return vec

    def compose(self, a: str, b: str) -> dict:
        """Symbolic rule of the product a b acting on |j,k>."""
        out = {}
        for (bj, bk), cb in self.rules[b].items():
            for (aj, ak), ca in self.rules[a].items():
                key = (aj + bj, ak + bk)
                out[key] = out.get(key, Poly.const(0)) + ca.subs({"j": j + bj, "k": k + bk}) * cb
        return out

    def bracket_failures(self, alg=None) -> list:
        """Pairs whose commutator rule differs from the structure constants."""
        alg = alg or make_alt1()
        bad = []
        for a, b in itertools.combinations(ALT1_BASIS, 2):
            lhs = self.compose(a, b)
            for key, c in self.compose(b, a).items():
                lhs[key] = lhs.get(key, Poly.const(0)) - c
            for lab, c in alg.bracket(a, b).items():
                for key, rc in self.rules[lab].items():
                    lhs[key] = lhs.get(key, Poly.const(0)) - rc * c
            residual = {key: c for key, c in lhs.items() if not c.is_zero()}
            if residual:
                bad.append((a, b, residual))
        return bad

    def format_rule(self, gen: str) -> str:
        parts = []
        for (dj, dk), c in sorted(self.rules[gen].items()):
            parts.append(f"({c})|j{dj:+d},k{dk:+d}>".replace("+0", "").replace("-0", ""))
        return " + ".join(parts) if parts else "0"


def ladder_from_v_operators(ops: dict) -> LadderAction:
    """Coefficient extraction from D Psi_V with Psi_V = sum V^(j,k)/(j!k!) |jk>.

    A term c V1^a V2^b dV1^p dV2^q sends |j,k> to c (j)_a (k)_b |j+p-a, k+q-b>.
    """
    rules = {}
    for gen, op in ops.items():
        r = {}
        for d, coeff in op.terms.items():
            dd = dict(d)
            p, q = dd.get("V1", 0), dd.get("V2", 0)
            for mono, c in coeff.items():
                md = dict(mono)
                a, b = md.pop("V1", 0), md.pop("V2", 0)
                rest = Poly.monomial(md, c)
                key = (p - a, q - b)
                r[key] = r.get(key, Poly.const(0)) + rest * falling(j, a) * falling(k, b)
        rules[gen] = r
    return LadderAction(rules, "derived")


@lru_cache(maxsize=None)
def derive_ladder_actions() -> LadderAction:
    la = ladder_from_v_operators(v_operators())
    bad = la.bracket_failures()
    if bad:
        raise AssertionError(f"derived ladder actions violate brackets: {[b[:2] for b in bad]}")
    return la


PRINTED_ACTI = LadderAction({
    "Y1": {(1, 0): Poly.const(1)},
    "X1": {(0, 1): Poly.const(1)},
    "Y0": {(1, -1): -k, (0, 0): -gamma},
    "X0": {(0, 0): -(j + k + x)},
    "Y-1": {(1, -1): k * (k - 1), (0, -1): gamma * 2},
    "X-1": {(0, -1): k * (k + j * 2 + x * 2 - 1), (-1, 0): j * gamma * 2},
}, "printed")


@dataclass
class ActionReport:
    derived: LadderAction
    bracket_failures: list
    printed_bracket_failures: list
    discrepancies: list  # (generator, printed rule, derived rule)


def acti_check() -> ActionReport:
    la = derive_ladder_actions()
    disc = []
    for g in ALT1_BASIS:
        if la.rules[g] != PRINTED_ACTI.rules[g]:
            disc.append((g, PRINTED_ACTI.format_rule(g), la.format_rule(g)))
    return ActionReport(la, la.bracket_failures(), [f[:2] for f in PRINTED_ACTI.bracket_failures()], disc)


# pairing -------------------------------------------------------------------------------

class FockPairing:
    """<|jk>, v> = Omega-coefficient of (Y-1)^j (X-1)^k v, from Y1^+ = Y-1, X1^+ = X-1."""

    def __init__(self, ladder: LadderAction | None = None):
        self.ladder = ladder or derive_ladder_actions()
        self._cache = {}

    def gram(self, u, v) -> Poly:
        key = (u, v)
        if key not in self._cache:
            vec = self.ladder.word(["Y-1"] * u[0] + ["X-1"] * u[1], FockVector.basis(*v))
            self._cache[key] = vec.coeff(0, 0)
        return self._cache[key]

    def inner(self, a: FockVector, b: FockVector) -> Poly:
        out = Poly.const(0)
        for u, cu in a.coeffs.items():
            for v, cv in b.coeffs.items():
                g = self.gram(u, v)
                if not g.is_zero():
                    out = out + cu * cv * g
        return out


def _levels(n):
    return [(a, l - a) for l in range(n + 1) for a in range(l + 1)]


def gram_vs_leibniz(level: int = 4, check_series: bool = True) -> list:
    """Mismatches between the ladder Gram matrix and the Leibniz coefficients."""
    pairing = FockPairing()
    series = leibniz_series(level) if check_series else None
    bad = []
    for u in _levels(level):
        for v in _levels(level):
            closed = leibniz_coefficient(u[0], u[1], v[0], v[1])
            if series is not None and series.coeff((u[0], u[1], v[0], v[1])) != closed:
                bad.append(("series", u, v))
            expect = closed * (factorial(u[0]) * factorial(u[1]) * factorial(v[0]) * factorial(v[1]))
            if pairing.gram(u, v) != expect:
                bad.append(("gram", u, v))
    return bad


def adjointness_check(level: int = 6) -> list:
    """<Y1 u, v> = <u, Y-1 v>, <X1 u, v> = <u, X-1 v> and symmetry, on basis vectors."""
    pairing = FockPairing()
    la = pairing.ladder
    bad = []
    basis = _levels(level)
    for u in basis:
        U = FockVector.basis(*u)
        for v in basis:
            V = FockVector.basis(*v)
            for up, down in (("Y1", "Y-1"), ("X1", "X-1")):
                if pairing.inner(la.act(up, U), V) != pairing.inner(U, la.act(down, V)):
                    bad.append((up, u, v))
            if pairing.gram(u, v) != pairing.gram(v, u):
                bad.append(("sym", u, v))
    return bad


def coherent_state(a, b, order: int = 4) -> FockVector:
    """sum a^j b^k/(j! k!) |jk> for j + k <= order."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    return FockVector({(p, q): a ** p * b ** q * Fraction(1, factorial(p) * factorial(q))
                       for p, q in _levels(order)})


def coherent_inner_check(order: int = 4) -> bool:
    pairing = FockPairing()
    lhs = pairing.inner(coherent_state(B1, B2, order), coherent_state(V1, V2, order))
    series = leibniz_series(order)
    names = ["B1", "B2", "V1", "V2"]
    lhs_c = lhs.coefficients(names)
    keys = set(lhs_c) | {key for key in series.coeffs if key[0] + key[1] <= order and key[2] + key[3] <= order}
    zero = Poly.const(0)
    return all(lhs_c.get(key, zero) == series.coeff(key) for key in keys)


# bosonic realization ----------------------------------------------------------------------

def transpose_to_bosons(op: DiffOp) -> DiffOp:
    """V^a dV^p -> z^p dz^a: multiplication by V_i becomes annihilation,
    differentiation by V_i becomes creation (multiplication by z_i)."""
    out = DiffOp.zero()
    for d, coeff in op.terms.items():
        dd = dict(d)
        for mono, c in coeff.items():
            md = dict(mono)
            a = {1: md.pop("V1", 0), 2: md.pop("V2", 0)}
            rest = Poly.monomial(md, c)
            term = DiffOp.mul(rest * z1 ** dd.get("V1", 0) * z2 ** dd.get("V2", 0))
            for i in (1, 2):
                if a[i]:
                    term = term * DiffOp.d(f"z{i}", a[i])
            out = out + term
    return out


def _dz(i, n=1):
    return DiffOp.d(f"z{i}", n)


def _m(p):
    return DiffOp.mul(p)


IMRES = {
    "Y1": _m(z1),
    "X1": _m(z2),
    "Y0": _m(-z1) * _dz(2) - _m(gamma),
    "X0": _m(-z1) * _dz(1) - _m(z2) * _dz(2) - _m(x),
    "Y-1": _m(gamma * 2) * _dz(2) + _m(z1) * _dz(2, 2),
    "X-1": _m(z2) * _dz(2, 2) + _m(z1 * 2) * _dz(1) * _dz(2) + _m(gamma * 2) * _dz(1) + _m(x * 2) * _dz(2),
}
PRINTED_BOSRE = dict(IMRES)
PRINTED_BOSRE["X-1"] = _m(z2) * _dz(1, 2) + _m(z1 * 2) * _dz(1) * _dz(2) + _m(gamma * 2) * _dz(1) + _m(x * 2) * _dz(2)


def word_bracket_failures(words: dict) -> list:
    alg = make_alt1()
    bad = []
    for a, b in itertools.combinations(ALT1_BASIS, 2):
        rhs = DiffOp.zero()
        for lab, c in alg.bracket(a, b).items():
            rhs = rhs + words[lab] * c
        if words[a].commutator(words[b]) != rhs:
            bad.append((a, b))
    return bad


def _word_terms(op: DiffOp) -> set:
    return {(d, c) for d, coeff in op.terms.items() for c in [coeff.format()]}


@dataclass
class BosonicReport:
    derived: dict
    derived_equals_imres: bool
    bracket_failures: list
    printed_bracket_failures: list
    fock_mismatches: list
    discrepancies: list = field(default_factory=list)  # (gen, printed, derived)


def bosonic_realization_check(level: int = 6) -> BosonicReport:
    vops = v_operators()
    words = {g: transpose_to_bosons(vops[g]) for g in ("Y-1", "X-1")}
    words["Y1"], words["X1"] = _m(z1), _m(z2)
    words["Y0"] = words["X1"].commutator(words["Y-1"]) * Fraction(1, 2)
    words["X0"] = words["X1"].commutator(words["X-1"]) * Fraction(1, 2)
    same = all(words[g] == IMRES[g] for g in ALT1_BASIS)
    la = derive_ladder_actions()
    mism = []
    for a, b in _levels(level):
        for g in ALT1_BASIS:
            img = words[g].apply(z1 ** a * z2 ** b)
            vec = la.act(g, FockVector.basis(a, b))
            as_poly = sum((c * z1 ** p * z2 ** q for (p, q), c in vec.coeffs.items()), Poly.const(0))
            if img != as_poly:
                mism.append((g, (a, b)))
    disc = [(g, PRINTED_BOSRE[g].format(), words[g].format()) for g in ALT1_BASIS if PRINTED_BOSRE[g] != words[g]]
    return BosonicReport(words, same, word_bracket_failures(words), word_bracket_failures(PRINTED_BOSRE), mism, disc)


# tilted plane ---------------------------------------------------------------------------

def _ad_series(alg, gen: str, elem: dict, b: Poly, max_terms: int = 10) -> dict:
    """exp(b ad gen) elem, with the adjoint series terminating (gen is ad-nilpotent)."""
    out = dict(elem)
    term = dict(elem)
    for n in range(1, max_terms):
        new = {}
        for lab, c in term.items():
            for l2, c2 in alg.bracket(gen, lab).items():
                new[l2] = new.get(l2, Poly.const(0)) + c * c2 * b * Fraction(1, n)
        term = {l: c for l, c in new.items() if not c.is_zero()}
        if not term:
            return {l: c for l, c in out.items() if not c.is_zero()}
        for l, c in term.items():
            out[l] = out.get(l, Poly.const(0)) + c
    raise ValueError("adjoint series did not terminate")


def _bracket_elems(alg, a: dict, b: dict) -> dict:
    out = {}
    for la_, ca in a.items():
        for lb, cb in b.items():
            for l, c in alg.bracket(la_, lb).items():
                out[l] = out.get(l, Poly.const(0)) + ca * cb * c
    return {l: c for l, c in out.items() if not c.is_zero()}


@dataclass
class TiltedPlaneReport:
    ybar: dict
    xbar: dict
    matches_printed: bool
    commutator: dict


def tilted_plane_check(b=None) -> TiltedPlaneReport:
    b = beta if b is None else Poly.coerce(b)
    alg = make_alt1()
    one = Poly.const(1)
    yb = _ad_series(alg, "X-1", {"Y1": one}, b)
    xb = _ad_series(alg, "X-1", {"X1": one}, b)
    want_y = {"Y1": one, "Y0": b * -2, "Y-1": b ** 2}
    want_x = {"X1": one, "X0": b * -2, "X-1": b ** 2}
    clean = lambda d: {l: c for l, c in d.items() if not c.is_zero()}
    ok = yb == clean(want_y) and xb == clean(want_x)
    return TiltedPlaneReport(yb, xb, ok, _bracket_elems(alg, yb, xb))


# generating function of the canonical Appell system ---------------------------------------

def appell_basis_functions(order: int = 4, b=None) -> dict:
    """h_jk(y1, y2): |jk> written as a polynomial in the tilted operators applied to Omega."""
    b = beta if b is None else Poly.coerce(b)
    la = derive_ladder_actions()
    bar = {"Y": {"Y1": 1, "Y0": b * -2, "Y-1": b ** 2}, "X": {"X1": 1, "X0": b * -2, "X-1": b ** 2}}

    def apply_bar(which, vec):
        out = FockVector()
        for g, c in bar[which].items():
            out = out + la.act(g, vec) * c
        return out

    h = {}
    for a, c in _levels(order):
        vec = OMEGA
        for _ in range(c):
            vec = apply_bar("X", vec)
        for _ in range(a):
            vec = apply_bar("Y", vec)
        # vec = |a c> + lower levels
        assert vec.coeff(a, c) == 1
        poly = y1 ** a * y2 ** c
        for key, coef in vec.coeffs.items():
            if key != (a, c):
                poly = poly - coef * h[key]
        h[(a, c)] = poly
    return h


def prop8_rhs(order: int = 4, third_sign: int = 1, b=None):
    """exp(y1 v1/(1+b v2)^2) exp(y2 v2/(1+b v2)) exp(-2 gamma b v1/(1 + third_sign*b v2)) (1+b v2)^(-2x)."""
    b = beta if b is None else Poly.coerce(b)
    d = 1 + b * v2
    d3 = 1 + b * v2 * third_sign
    e = Mul((Exp(Rat(RationalFn(y1 * v1, d ** 2))), Exp(Rat(RationalFn(y2 * v2, d))),
             Exp(Rat(RationalFn(gamma * b * v1 * -2, d3))), Pow(Rat(d), x * -2)))
    return series_expand(e, ["v1", "v2"], order, total=order)


@dataclass
class Prop8Report:
    h: dict
    corrected_mismatches: list
    printed_mismatches: list
    discrepancies: list


def prop8_generating_function(order: int = 4) -> Prop8Report:
    h = appell_basis_functions(order)
    out = {}
    for p, q in _levels(order):
        out[(p, q)] = h[(p, q)] * Fraction(1, factorial(p) * factorial(q))
    corrected = prop8_rhs(order, 1)
    printed = prop8_rhs(order, -1)
    cm = [key for key in _levels(order) if corrected.coeff(key) != out[key]]
    pm = [key for key in _levels(order) if printed.coeff(key) != out[key]]
    disc = []
    if pm:
        disc.append(("third factor", "exp(-2*gamma*beta*v1/(1 - beta*v2))",
                     "exp(-2*gamma*beta*v1/(1 + beta*v2))"))
    return Prop8Report(h, cm, pm, disc)


__all__ = [
    "leibniz_expr", "dlog_leibniz", "leibniz_coefficient", "leibniz_series", "derive_pde", "PRINTED_DETLF",
    "pde_holds", "detlf_check", "DetlfReport", "v_operators", "FockVector", "OMEGA", "LadderAction",
    "ladder_from_v_operators", "derive_ladder_actions", "PRINTED_ACTI", "acti_check", "ActionReport",
    "FockPairing", "gram_vs_leibniz", "adjointness_check", "coherent_state", "coherent_inner_check",
    "transpose_to_bosons", "IMRES", "PRINTED_BOSRE", "word_bracket_failures", "bosonic_realization_check",
    "BosonicReport", "tilted_plane_check", "TiltedPlaneReport", "appell_basis_functions", "prop8_rhs",
    "prop8_generating_function", "Prop8Report",
]
