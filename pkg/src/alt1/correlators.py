"""Two-point functions and their covariance under two-particle generators.

A correlator form is

    F = prod_i base_i^(e_i) * exp(E) * sum_k c_k f^(k)(u)

with Poly bases, formal (Poly) exponents, rational E, u and c_k, and an
uninterpreted scaling function f.  Derivatives stay in this class, so the
residual X F / prefactor is a finite combination of f, f', f'', ... with
rational coefficients, and deciding whether it vanishes is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .diffop import DiffOp, get_realization, zeta_physical
from .kernel import Poly, RationalFn
from .kernel.scalar import GaussQ, I

IU = Poly.const(I)
COORDS = ("t", "r", "zeta", "M")
PARAMS = ("x", "gamma")


def _v(name):
    return Poly.var(name)


t1, r1, z1, M1 = _v("t1"), _v("r1"), _v("zeta1"), _v("M1")
t2, r2, z2, M2 = _v("t2"), _v("r2"), _v("zeta2"), _v("M2")
x1, x2, g1, g2 = _v("x1"), _v("x2"), _v("gamma1"), _v("gamma2")


def to_rational(p) -> RationalFn:
    """Laurent Poly -> RationalFn over ordinary polynomials."""
    if isinstance(p, RationalFn):
        return p
    p = Poly.coerce(p)
    shift = {}
    for mono in p.terms:
        for v, e in mono:
            if e < 0:
                shift[v] = max(shift.get(v, 0), -e)
    if not shift:
        return RationalFn(Poly(p.terms))
    num_terms = {}
    for mono, c in p.terms.items():
        d = dict(mono)
        for v, s in shift.items():
            d[v] = d.get(v, 0) + s
        num_terms[tuple(sorted(((v, e) for v, e in d.items() if e), key=lambda ve: ve[0]))] = c
    den = Poly.const(1)
    for v, s in shift.items():
        den = den * Poly.var(v) ** s
    return RationalFn(Poly(num_terms), den)


# two-particle operators ------------------------------------------------------------------

def on_particle(op: DiffOp, i: int, params=None) -> DiffOp:
    """Rename coordinates/parameters of a one-particle operator to particle ``i``.

    ``params`` optionally overrides the parameter images (e.g. {"M": -M1}).
    """
    ren = {name: f"{name}{i}" for name in COORDS + PARAMS}
    values = {name: Poly.var(new) for name, new in ren.items()}
    values.update(params or {})
    terms = {}
    for d, c in op.terms.items():
        nd = tuple(sorted((ren.get(v, v), k) for v, k in d))
        c2 = _subs_laurent(c, values)
        terms[nd] = terms.get(nd, Poly.const(0)) + c2
    return DiffOp(terms)


def _subs_laurent(p: Poly, values: dict) -> Poly:
    out = Poly.const(0)
    for mono, c in p.terms.items():
        term = Poly.const(c)
        for v, e in mono:
            val = values.get(v, Poly.var(v))
            if e < 0:
                val = Poly.var(val.format(), laurent=True) if val.is_monomial() and len(val.variables()) == 1 else val
                if not (val.is_monomial()):
                    raise ValueError("negative power of a non-monomial")
            term = term * val ** e
        out = out + term
    return out


@dataclass
class TwoParticleOp:
    name: str
    op: DiffOp

    @classmethod
    def from_single(cls, name, op: DiffOp, params1=None, params2=None) -> "TwoParticleOp":
        return cls(name, on_particle(op, 1, params1) + on_particle(op, 2, params2))


# correlator forms ------------------------------------------------------------------------

@dataclass
class Form:
    name: str
    factors: list  # (base Poly, exponent Poly)
    exp_arg: RationalFn
    u: RationalFn | None  # argument of f; None: no scaling function
    coeffs: dict = field(default_factory=lambda: {0: RationalFn(1)})
    assumptions: list = field(default_factory=list)

    def dlog_prefactor(self, var: str) -> RationalFn:
        out = self.exp_arg.diff(var)
        for base, e in self.factors:
            db = base.diff(var)
            if not db.is_zero():
                out = out + RationalFn(db * e, base)
        return out

    def derivative(self, coeffs: dict, var: str) -> dict:
        """Coefficients of d/dvar (prefactor * sum c_k f^(k)) divided by the prefactor."""
        dl = self.dlog_prefactor(var)
        du = self.u.diff(var) if self.u is not None else RationalFn(0)
        out = {}
        for k, c in coeffs.items():
            for key, val in ((k, dl * c + c.diff(var)), (k + 1, c * du)):
                if val.is_zero():
                    continue
                out[key] = out[key] + val if key in out else val
        return {k: c for k, c in out.items() if not c.is_zero()}

    def apply(self, op: DiffOp) -> dict:
        """Residual of op F as {k: coefficient of f^(k)} relative to the prefactor."""
        out = {}
        for d, c in op.terms.items():
            cur = dict(self.coeffs)
            for v, n in d:
                for _ in range(n):
                    cur = self.derivative(cur, v)
            crf = to_rational(c)
            for k, val in cur.items():
                val = val * crf
                out[k] = out[k] + val if k in out else val
        return {k: c for k, c in out.items() if not c.is_zero()}

    def variables(self) -> set:
        vs = set(self.exp_arg.variables())
        for b, e in self.factors:
            vs |= b.variables() | e.variables()
        if self.u is not None:
            vs |= self.u.variables()
        return vs


def phi_st() -> Form:
    """(t1-t2)^(-(x1+x2)/2) (t1/t2)^((x2-x1)/2) f(zeta1 - zeta2 + (i/2)(r1-r2)^2/(t1-t2))."""
    half = Fraction(1, 2)
    return Form("phi_st", [(t1 - t2, -(x1 + x2) * half), (t1, (x2 - x1) * half), (t2, (x1 - x2) * half)],
                RationalFn(0), RationalFn(z1 - z2) + RationalFn(IU * (r1 - r2) ** 2 * half, t1 - t2))


def phi_j() -> Form:
    """(t1-t2)^(-x1) f(zeta1 + zeta2 + (i/2)(r1^2 - r2^2)/(t1-t2)), with x2 = x1."""
    half = Fraction(1, 2)
    return Form("phi_j", [(t1 - t2, -x1)], RationalFn(0),
                RationalFn(z1 + z2) + RationalFn(IU * (r1 ** 2 - r2 ** 2) * half, t1 - t2),
                assumptions=["x2 = x1 (Kronecker delta)"])


def fixed1() -> Form:
    half = Fraction(1, 2)
    return Form("fixed1", [(t1 - t2, -(x1 + x2) * half), (t1, (x2 - x1) * half), (t2, (x1 - x2) * half)],
                RationalFn(-M1 * (r1 - r2) ** 2 * half, t1 - t2), None,
                assumptions=["t1 > t2 (Heaviside factor stripped)", "delta(M1 - M2) stripped",
                             "conjugate field carries mass -M1 (Bargman pairing)"])


def fixed2() -> Form:
    half = Fraction(1, 2)
    return Form("fixed2", [(t1 - t2, -x1)], RationalFn(-M1 * (r1 ** 2 - r2 ** 2) * half, t1 - t2), None,
                assumptions=["x2 = x1", "M2 = M1 (delta(M1 - M2))"])


def fixed3() -> Form:
    return Form("fixed3", [(t1 - t2, -x1)], RationalFn(-g1 * (r1 - r2) * 2, t1 - t2), None,
                assumptions=["x2 = x1", "gamma2 = gamma1"])


FORMS = {"phi_st": phi_st, "phi_j": phi_j, "fixed1": fixed1, "fixed2": fixed2, "fixed3": fixed3}


# residual classification ------------------------------------------------------------------

@dataclass
class ResidualEntry:
    generator: str
    residual: dict
    classification: str  # zero | ode | other
    constraint: str | None = None

    def format(self) -> str:
        return format_residual(self.residual)


@dataclass
class ResidualReport:
    form: str
    assumptions: list
    entries: list

    def by_generator(self) -> dict:
        return {e.generator: e for e in self.entries}


def format_residual(res: dict) -> str:
    if not res:
        return "0"
    names = {0: "f", 1: "f'", 2: "f''"}
    parts = []
    for k in sorted(res, reverse=True):
        parts.append(f"({res[k]})*{names.get(k, f'f^({k})')}")
    return " + ".join(parts)


def classify(res: dict, form: Form, params=("x1", "x2", "gamma1", "gamma2")) -> tuple:
    if not res:
        return "zero", None
    if form.u is not None and set(res) <= {0, 1} and 1 in res:
        s = res.get(0, RationalFn(0)) * form.u / res[1]
        if s.variables() <= set(params):
            return "ode", f"u*f'(u) + ({s})*f(u) = 0"
    return "other", None


def covariance_scan(generators: dict, form: Form, params1=None, params2=None) -> ResidualReport:
    entries = []
    for name, op in generators.items():
        two = TwoParticleOp.from_single(name, op, params1, params2)
        res = form.apply(_restrict(two.op, form))
        cls, constraint = classify(res, form)
        entries.append(ResidualEntry(name, res, cls, constraint))
    return ResidualReport(form.name, list(form.assumptions), entries)


def _restrict(op: DiffOp, form: Form) -> DiffOp:
    """Apply the form's parameter identifications to the operator coefficients."""
    ties = {}
    for a in form.assumptions:
        if a.startswith("x2 = x1"):
            ties["x2"] = x1
        elif a.startswith("gamma2 = gamma1"):
            ties["gamma2"] = g1
    if not ties:
        return op
    return DiffOp({d: _subs_laurent(c, ties) for d, c in op.terms.items()})


def scan_phi_st() -> ResidualReport:
    return covariance_scan(zeta_physical(), phi_st())


def zeta_phase_on_phi_j() -> ResidualEntry:
    """The standard-representation M0 = i d/dzeta pair applied to the phi_j form.

    phi_j depends on zeta1 + zeta2, so the pair does not annihilate it.
    """
    form = phi_j()
    two = TwoParticleOp.from_single("M0", zeta_physical()["M0"])
    res = form.apply(_restrict(two.op, form))
    cls, constraint = classify(res, form)
    return ResidualEntry("M0", res, cls, constraint)


def scan_phi_j() -> ResidualReport:
    form = phi_j()
    return covariance_scan(get_realization("contact_J").alt1(), form)


# Fourier transport zeta -> M ---------------------------------------------------------------

def fourier_transport(op: DiffOp, zeta: str = "zeta", mass: str = "M") -> DiffOp:
    """d/dzeta -> i M, multiplication by zeta -> i d/dM (kernel exp(-i M zeta))."""
    Mv = Poly.var(mass)
    out = DiffOp.zero()
    for d, c in op.terms.items():
        dd = dict(d)
        kz = dd.pop(zeta, 0)
        rest_d = DiffOp.mul(1)
        for v, n in sorted(dd.items()):
            rest_d = rest_d * DiffOp.d(v, n)
        for mono, coef in c.terms.items():
            md = dict(mono)
            a = md.pop(zeta, 0)
            if a < 0:
                raise ValueError("coefficient is not polynomial in zeta")
            rest = Poly.monomial(md, coef, laurent=c.laurent)
            term = DiffOp.mul(rest * IU ** a)
            if a:
                term = term * DiffOp.d(mass, a)
            term = term * DiffOp.mul((IU * Mv) ** kz) * rest_d
            out = out + term
    return out


def transported_standard() -> dict:
    return {k: fourier_transport(v) for k, v in zeta_physical().items()}


def transported_contact() -> dict:
    return {k: fourier_transport(v) for k, v in get_realization("contact_J").alt1().items()}


def _mass_free(ops: dict) -> dict:
    return {k: v for k, v in ops.items() if all(dict(d).get("M", 0) == 0 for d in v.terms)}


@dataclass
class FixedMassReport:
    reports: dict  # item -> ResidualReport
    skipped: dict  # item -> generators acting on the mass variable


def fixed_mass_correlator_check() -> FixedMassReport:
    std = transported_standard()
    std_free = _mass_free(std)
    jt = transported_contact()
    jt_free = _mass_free(jt)
    fm = get_realization("fixed_mass").alt1()
    reports = {
        "item1": covariance_scan(std_free, fixed1(), {"M": M1}, {"M": -M1}),
        "item2": covariance_scan(jt_free, fixed2(), {"M": M1}, {"M": M1}),
        "item3": covariance_scan(fm, fixed3()),
    }
    skipped = {"item1": sorted(set(std) - set(std_free)), "item2": sorted(set(jt) - set(jt_free)), "item3": []}
    return FixedMassReport(reports, skipped)


# independent sympy spot checks -------------------------------------------------------------

_SYM = {}


def _sym(name):
    if name not in _SYM:
        _SYM[name] = sympy.Symbol(name)
    return _SYM[name]


def _scalar_sympy(c: GaussQ):
    return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)


def poly_to_sympy(p) -> sympy.Expr:
    if isinstance(p, RationalFn):
        return poly_to_sympy(p.num) / poly_to_sympy(p.denominator())
    out = sympy.Integer(0)
    for mono, c in Poly.coerce(p).terms.items():
        term = _scalar_sympy(c)
        for v, e in mono:
            term = term * _sym(v) ** e
        out += term
    return out


def form_to_sympy(form: Form, lam):
    F = sympy.exp(poly_to_sympy(form.exp_arg))
    for b, e in form.factors:
        F = F * poly_to_sympy(b) ** poly_to_sympy(e)
    if form.u is not None:
        F = F * sympy.exp(lam * poly_to_sympy(form.u))
    return F


def sympy_residual_ratio(op: DiffOp, form: Form, lam):
    F = form_to_sympy(form, lam)
    total = sympy.Integer(0)
    for d, c in op.terms.items():
        g = F
        for v, n in d:
            g = sympy.diff(g, _sym(v), n)
        total += poly_to_sympy(to_rational(c)) * g
    return sympy.expand(total / F)


def _random_point(rng, names):
    pt = {}
    for n in sorted(names):
        pt[n] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    if "t1" in pt or "t2" in pt:
        a, b = Fraction(rng.randint(1, 20), rng.randint(1, 4)), Fraction(rng.randint(1, 20), rng.randint(1, 4))
        if a == b:
            a += 1
        pt["t1"], pt["t2"] = max(a, b), min(a, b)
    for n in ("r1", "r2"):
        if n in pt and pt[n] == 0:
            pt[n] = Fraction(1, 3)
    return pt


def spot_check(report: ResidualReport, generators: dict, form: Form, params1=None, params2=None,
               points: int = 20, lambdas=(Fraction(1, 2), Fraction(-2), Fraction(3)), seed: int = 0) -> list:
    """Compare residuals with an independent sympy evaluation at random rational points.

    f is instantiated as exp(lam u); then (X F)/F = sum_k c_k lam^k exactly.
    Returns a list of (generator, point) disagreements.
    """
    rng = random.Random(seed)
    bad = []
    lam_s = sympy.Symbol("lam")
    for entry in report.entries:
        two = TwoParticleOp.from_single(entry.generator, generators[entry.generator], params1, params2)
        op = _restrict(two.op, form)
        ratio = sympy_residual_ratio(op, form, lam_s)
        names = {str(s) for s in ratio.free_symbols} - {"lam"}
        for c in entry.residual.values():
            names |= c.variables()
        for _ in range(points):
            pt = _random_point(rng, names | {"t1", "t2"})
            for lam in lambdas:
                subs = {_sym(k): sympy.Rational(v.numerator, v.denominator) for k, v in pt.items()}
                subs[lam_s] = sympy.Rational(lam.numerator, lam.denominator)
                expect = ratio.xreplace(subs)
                mine = sympy.Integer(0)
                for k, c in entry.residual.items():
                    mine += poly_to_sympy(c).xreplace(subs) * subs[lam_s] ** k
                diff = sympy.expand(expect - mine)
                if diff != 0 and sympy.simplify(diff) != 0:
                    bad.append((entry.generator, pt))
    return bad


__all__ = [
    "to_rational", "on_particle", "TwoParticleOp", "Form", "phi_st", "phi_j", "fixed1", "fixed2", "fixed3",
    "FORMS", "ResidualEntry", "ResidualReport", "format_residual", "classify", "covariance_scan",
    "scan_phi_st", "scan_phi_j", "zeta_phase_on_phi_j", "fourier_transport", "transported_standard", "transported_contact",
    "fixed_mass_correlator_check", "FixedMassReport", "poly_to_sympy", "form_to_sympy",
    "sympy_residual_ratio", "spot_check",
]
