"""Differential operators with Laurent-polynomial coefficients.

Operators are kept in normal order (coefficients left, derivatives right) as a
map from a derivative multi-index to a coefficient polynomial.  Composition
uses the Leibniz rule, so any product is immediately canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, gcd

from .kernel import I, Poly, solve_linear
from .kernel.poly import PRETTY_NAMES, format_monomial, format_scalar, join_signed, scalar_prefix, var_key
from .kernel.scalar import ONE, ZERO, as_scalar

Deriv = tuple  # ((var, order), ...) sorted by name


def _dmul(a: Deriv, b: Deriv) -> Deriv:
    d = dict(a)
    for v, k in b:
        d[v] = d.get(v, 0) + k
    return tuple(sorted(d.items()))


def _sub_multi(alpha: Deriv):
    """All (gamma, coefficient, alpha - gamma) with gamma <= alpha componentwise."""
    names = [v for v, _ in alpha]
    ranges = [range(k + 1) for _, k in alpha]
    for gam in itertools.product(*ranges):
        c = 1
        rest = []
        g = []
        for v, k, j in zip(names, (k for _, k in alpha), gam):
            c *= comb(k, j)
            if j:
                g.append((v, j))
            if k - j:
                rest.append((v, k - j))
        yield tuple(g), c, tuple(rest)


class DiffOp:
    """Normal-ordered differential operator.

    >>> t = Poly.var("t")
    >>> dt = DiffOp.d("t")
    >>> str(dt.commutator(DiffOp.mul(t) * dt))
    'd_t'
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def d(cls, var: str, k: int = 1) -> "DiffOp":
        return cls({((var, k),): Poly.const(1)})

    @classmethod
    def mul(cls, p) -> "DiffOp":
        return cls({(): Poly.coerce(p)})

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls()

    @classmethod
    def coerce(cls, x) -> "DiffOp":
        return x if isinstance(x, DiffOp) else cls.mul(x)

    # ring structure ----------------------------------------------------------------
    def __add__(self, o):
        o = DiffOp.coerce(o)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return DiffOp(out)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp({k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-DiffOp.coerce(o))

    def __rsub__(self, o):
        return DiffOp.coerce(o) - self

    def __mul__(self, o):
        """Composition ``self o o``; scalars and polynomials act by left multiplication."""
        if not isinstance(o, DiffOp):
            o = Poly.coerce(o)
            if o.is_constant():
                c = o.constant_term()
                return DiffOp({k: v.scale(c) for k, v in self.terms.items()})
            return self * DiffOp.mul(o)
        out = {}
        for alpha, a in self.terms.items():
            for beta, b in o.terms.items():
                for gam, c, rest in _sub_multi(alpha):
                    db = b
                    for v, j in gam:
                        db = db.diff(v, j)
                    if db.is_zero():
                        continue
                    key = _dmul(rest, beta)
                    term = (a * db).scale(c)
                    out[key] = out[key] + term if key in out else term
        return DiffOp(out)

    def __rmul__(self, o):
        o = Poly.coerce(o)
        return DiffOp({k: o * v for k, v in self.terms.items()})

    def commutator(self, o: "DiffOp") -> "DiffOp":
        return self * o - o * self

    def __pow__(self, n: int):
        out = DiffOp.mul(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        if not isinstance(o, DiffOp):
            o = DiffOp.coerce(o)
        return self.terms == o.terms

    __hash__ = None

    # queries ---------------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        return max((sum(k for _, k in d) for d in self.terms), default=0)

    def coefficient(self, deriv) -> Poly:
        if isinstance(deriv, dict):
            deriv = tuple(sorted((v, k) for v, k in deriv.items() if k))
        return self.terms.get(tuple(deriv), Poly.const(0))

    def variables(self) -> set:
        out = set()
        for d, c in self.terms.items():
            out |= {v for v, _ in d} | c.variables()
        return out

    def subs(self, mapping) -> "DiffOp":
        """Substitute into coefficients only (parameters, not differentiated variables)."""
        return DiffOp({k: v.subs(mapping) for k, v in self.terms.items()})

    def apply(self, f: Poly) -> Poly:
        out = Poly.const(0)
        for d, c in self.terms.items():
            g = f
            for v, k in d:
                g = g.diff(v, k)
            out = out + c * g
        return out

    def vector_field(self) -> dict:
        """First-order part as ``{var: component}``; raises if order > 1."""
        if self.order() > 1:
            raise ValueError("not a first-order operator")
        return {d[0][0]: c for d, c in self.terms.items() if d}

    def zeroth_order(self) -> Poly:
        return self.terms.get((), Poly.const(0))

    # display ------------------------------------------------------------------------
    def __str__(self):
        return self.format(False)

    def __repr__(self):
        return f"DiffOp({self})"

    def pretty(self) -> str:
        return self.format(True)

    def format(self, pretty: bool = False) -> str:
        if not self.terms:
            return "0"

        def dkey(d):
            return (-sum(k for _, k in d), [(var_key(v), -k) for v, k in sorted(d, key=lambda x: var_key(x[0]))])

        parts = []
        for d in sorted(self.terms, key=dkey):
            dstr = _format_deriv(d, pretty)
            parts.append(_format_coeff(self.terms[d], dstr, pretty))
        return join_signed(parts, pretty)


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _format_deriv(d: Deriv, pretty: bool) -> str:
    items = sorted(d, key=lambda x: var_key(x[0]))
    if pretty:
        return "".join("∂" + PRETTY_NAMES.get(v, v) + (str(k).translate(_SUP) if k > 1 else "") for v, k in items)
    return "*".join(f"d_{v}" + (f"^{k}" if k > 1 else "") for v, k in items)


def _format_coeff(c: Poly, dstr: str, pretty: bool) -> str:
    """Coefficient with monomial content and a scalar pulled out, e.g. -I*t*(2*x - 1)."""
    content = c.monomial_content()
    rest = c.divexact(Poly({content: ONE}, c.laurent)) if content else c
    mono = format_monomial(content, pretty)
    sep = "" if pretty else "*"
    if len(rest) == 1:
        s = rest.constant_term() if rest.is_constant() else None
        if s is None:
            body = rest * Poly({content: ONE}, c.laurent)
            (m, k), = body.terms.items()
            return scalar_prefix(k, pretty) + format_monomial(m, pretty) + (sep + dstr if dstr else "")
        if not mono and not dstr:
            return format_scalar(s, pretty)
        if not mono:
            return scalar_prefix(s, pretty) + dstr
        return scalar_prefix(s, pretty) + mono + (sep + dstr if dstr else "")
    lead = rest.sorted_terms()[0][1]
    inner = rest.scale(ONE / lead)
    if all(v.is_real() for v in inner.terms.values()):
        den = 1
        for v in inner.terms.values():
            den = den * v.re.denominator // gcd(den, v.re.denominator)
        inner = inner.scale(den)
        lead = lead / den
    body = (mono + sep if mono else "") + f"({inner.format(pretty)})"
    return scalar_prefix(lead, pretty) + body + (sep + dstr if dstr else "")


# variables ---------------------------------------------------------------------------

def lvar(name: str) -> Poly:
    """Laurent variable (negative powers allowed)."""
    return Poly.var(name, laurent=True)


t, r, zeta, M = lvar("t"), lvar("r"), Poly.var("zeta"), Poly.var("M")
x, gamma, A = Poly.var("x"), Poly.var("gamma"), Poly.var("A")
IU = Poly.const(I)
Dt, Dr, Dz, DM = DiffOp.d("t"), DiffOp.d("r"), DiffOp.d("zeta"), DiffOp.d("M")
half = Fraction(1, 2)


# realizations ---------------------------------------------------------------------------

def zeta_physical() -> dict:
    """Generators of the conformal vector fields in (t, r, zeta) with scaling dimension x."""
    ops = {
        "X-1": -Dt,
        "Y-1/2": -Dr,
        "M0": IU * Dz,
        "Y1/2": -(t * Dr) + (IU * r) * Dz,
        "X0": -(t * Dt) - (r * half) * Dr - DiffOp.mul(x * half),
        "X1": -(t ** 2 * Dt) - (t * r) * Dr + (IU * r ** 2 * half) * Dz - DiffOp.mul(x * t),
        "N": -(t * Dt) + zeta * Dz,
        "V-": -(zeta * Dr) - r * Dt,
        "W": -(zeta ** 2 * Dz) - (zeta * r) * Dr - (r ** 2 * half) * Dt - DiffOp.mul(x * zeta),
        "V+": -(2 * t * r * Dt) - (2 * zeta * r) * Dz - (r ** 2 + 2 * IU * zeta * t) * Dr - DiffOp.mul(2 * x * r),
    }
    ops["D"] = ops["X0"] * 2 - ops["N"]
    return ops


# the sl(2) (x) R[eps] dictionary for the physical generators: abstract label -> (physical, factor)
ZETA_DICTIONARY = {
    "X1": ("V+", 1), "X0": ("D", 1), "X-1": ("Y-1/2", 1),
    "Y1": ("X1", 2), "Y0": ("Y1/2", 1), "Y-1": ("M0", 1),
}


def jrep_L(n: int) -> DiffOp:
    return (-(t ** (n + 1)) * Dt - (t ** n * r * Fraction(n + 1, 2)) * Dr
            + (IU * t ** (n - 1) * r ** 2 * Fraction((n + 1) * n, 4)) * Dz
            - DiffOp.mul(x * t ** n * Fraction(n + 1, 2)))


def jrep_Le(n: int) -> DiffOp:
    return -(t ** (n + 1) * r ** -1) * Dr + (IU * t ** n * Fraction(n + 1, 2)) * Dz


def fixed_L(n: int) -> DiffOp:
    return (-(t ** (n + 1)) * Dt - (t ** n * r * (n + 1)) * Dr
            - DiffOp.mul(x * t ** n * (n + 1) + gamma * t ** (n - 1) * r * (n * (n + 1))))


def fixed_Le(n: int) -> DiffOp:
    return -(t ** (n + 1)) * Dr - DiffOp.mul(gamma * t ** n * (n + 1))


@dataclass
class Realization:
    name: str
    L: object  # callable n -> DiffOp, or None
    Le: object

    def __call__(self, label: str) -> DiffOp:
        """Image of an abstract label: X-1..X1 / Y-1..Y1 or L(n) / L(n)^e."""
        if label[0] in "XY" and label[1:].lstrip("-").isdigit():
            n = int(label[1:])
            return self.L(n) if label[0] == "X" else self.Le(n)
        n = int(label[label.index("(") + 1: label.index(")")])
        return self.Le(n) if label.endswith("^e") else self.L(n)

    def alt1(self) -> dict:
        return {lab: self(lab) for lab in ("Y-1", "Y0", "Y1", "X-1", "X0", "X1")}


def _zeta_L(n):
    ops = zeta_physical()
    lab, c = ZETA_DICTIONARY[f"X{n}"]
    return ops[lab] * c


def _zeta_Le(n):
    ops = zeta_physical()
    lab, c = ZETA_DICTIONARY[f"Y{n}"]
    return ops[lab] * c


REALIZATIONS = {
    "zeta_standard": Realization("zeta_standard", _zeta_L, _zeta_Le),
    "contact_J": Realization("contact_J", jrep_L, jrep_Le),
    "fixed_mass": Realization("fixed_mass", fixed_L, fixed_Le),
}


def get_realization(name: str) -> Realization:
    try:
        return REALIZATIONS[name]
    except KeyError:
        raise KeyError(f"unknown realization {name!r}; choose from {sorted(REALIZATIONS)}") from None


# verification ------------------------------------------------------------------------

@dataclass
class Mismatch:
    pair: tuple
    residual: DiffOp


def verify_realization(images, alg, labels=None) -> list:
    """Check [rho(a), rho(b)] = rho([a, b]) for all pairs of ``labels``.

    ``images`` is a callable label -> DiffOp (it may be asked for labels outside
    ``labels`` when a bracket lands there).
    """
    labels = labels or alg.basis
    cache = {}

    def rho(lab):
        if lab not in cache:
            cache[lab] = images(lab)
        return cache[lab]

    bad = []
    for a, b in itertools.combinations(labels, 2):
        lhs = rho(a).commutator(rho(b))
        rhs = DiffOp()
        for lab, c in alg.bracket(a, b).items():
            rhs = rhs + rho(lab) * c
        if lhs != rhs:
            bad.append(Mismatch((a, b), lhs - rhs))
    return bad


def verify_W_realization(real: Realization, window: int = 8) -> list:
    from .liealg import make_W

    alg = make_W(2 * window)
    labels = [f"L({n})" for n in range(-window, window + 1)] + [f"L({n})^e" for n in range(-window, window + 1)]
    return verify_realization(real, alg, labels)


def verify_zeta_alt1() -> list:
    """Physical generators {D, X1, Y+-1/2, M0, V+} against the alt1 brackets."""
    from .liealg import make_alt1

    return verify_realization(REALIZATIONS["zeta_standard"], make_alt1())


def verify_zeta_sch1() -> list:
    """The Schroedinger subalgebra closes with sch1 brackets."""
    from .liealg import make_sv

    ops = zeta_physical()
    names = {"L(-1)": "X-1", "L(0)": "X0", "L(1)": "X1", "Y(-1/2)": "Y-1/2", "Y(1/2)": "Y1/2", "M(0)": "M0"}
    sv = make_sv(2)
    return verify_realization(lambda lab: ops[names[lab]], sv, list(names))


def casimir_parts(real: Realization):
    g = real.alt1()
    S0 = g["X-1"] * g["Y1"] + g["X1"] * g["Y-1"] - g["X0"] * g["Y0"] * 2
    S1 = g["Y-1"] * g["Y1"] - g["Y0"] * g["Y0"]
    return S0, S1


def casimir_image(real: Realization, Apar: Poly = A):
    """Return (S_hat, residuals) with S_hat = A*S0 + S1 and residuals [S_hat, eta]."""
    S0, S1 = casimir_parts(real)
    S = Apar * S0 + S1
    residuals = {lab: S.commutator(op) for lab, op in real.alt1().items()}
    return S, {k: v for k, v in residuals.items() if not v.is_zero()}


PRINTED_CASIMIR = {
    "zeta_standard": -(t ** 2) * (2 * IU * Dz * Dt + Dr * Dr) - (IU * t * (2 * x - 1)) * Dz,
    "contact_J": (IU * A * (x * half - 1)) * Dz - Dz * Dz * Fraction(1, 4),
}

PRINTED_CASIMIR_TEXT = {
    "zeta_standard": "−t²(2𝕚∂ζ∂t + ∂r²) − 𝕚t(2x−1)∂ζ",
    "contact_J": "𝕚A(x/2 − 1)∂ζ − ¼∂ζ²",
    "fixed_mass": "constant (order-zero operator)",
}


def schrodinger_operator() -> DiffOp:
    ops = zeta_physical()
    return ops["M0"] * ops["X-1"] * 2 - ops["Y-1/2"] * ops["Y-1/2"]


# expansion in a basis of operators -------------------------------------------------------

def _coeff_vector(op: DiffOp) -> dict:
    out = {}
    for d, c in op.terms.items():
        for m, v in c.terms.items():
            out[(d, m)] = v
    return out


def expand_in_basis(op: DiffOp, basis: list):
    """Scalars c with sum c_i basis_i = op, or None if op is not in the span."""
    vecs = [_coeff_vector(b) for b in basis]
    target = _coeff_vector(op)
    keys = sorted(set(target).union(*vecs), key=repr)
    rows = [[v.get(k, ZERO) for v in vecs] for k in keys]
    sol = solve_linear(rows, [target.get(k, ZERO) for k in keys]) if rows else None
    if sol is None:
        return [ZERO] * len(basis)
    if not sol.feasible:
        return None
    return sol.particular


# no-go theorem ---------------------------------------------------------------------------

@dataclass
class NoGoResult:
    status: str
    rank: int
    unknowns: int
    equations: int
    witness: dict | None
    drf_relation1: Poly | None
    drf_relation3: Poly | None
    relaxed_status: str


def _monomials(names, degree):
    for exps in itertools.product(range(degree + 1), repeat=len(names)):
        if sum(exps) <= degree:
            yield dict(zip(names, exps))


@lru_cache(maxsize=None)
def _nogo_ansatz(max_degree: int, include_order_zero: bool):
    unknowns, pieces = [], []
    xs = [0, 1] if include_order_zero else [0]
    slots = [("f", Dt), ("g", Dr), ("h", Dz)]
    if include_order_zero:
        slots.append(("k", DiffOp.mul(1)))
    for slot, d in slots:
        for mono in _monomials(["t", "r", "zeta"], max_degree):
            for xe in xs:
                m = dict(mono, x=xe)
                unknowns.append((slot, m))
                pieces.append(Poly.monomial(m) * d)
    return unknowns, pieces


@lru_cache(maxsize=None)
def _nogo_relation(max_degree: int, include_order_zero: bool, rel: int):
    """Sparse rows (dict col -> value), right-hand sides and tags for one relation."""
    ops = zeta_physical()
    gens = {"L-1": ops["Y-1/2"], "Le-1": ops["M0"], "Le0": ops["Y1/2"], "Le1": ops["X1"] * 2}
    gname, target = {
        1: ("L-1", gens["Le1"] * 3),
        2: ("Le-1", DiffOp()),
        3: ("Le0", DiffOp()),
    }[rel]
    _, pieces = _nogo_ansatz(max_degree, include_order_zero)
    g = gens[gname]
    cols = [_coeff_vector(p.commutator(g)) for p in pieces]
    tv = _coeff_vector(target)
    rows = {}
    for j, col in enumerate(cols):
        for k, v in col.items():
            rows.setdefault(k, {})[j] = v
    keys = set(rows) | set(tv)
    if not include_order_zero:
        # pure vector fields: compare the first-order parts only
        keys = {k for k in keys if k[0]}
    keys = sorted(keys, key=repr)
    return ([rows.get(k, {}) for k in keys], [tv.get(k, ZERO) for k in keys], [(rel, k) for k in keys])


def _nogo_system(max_degree: int, include_order_zero: bool, relations):
    unknowns, _ = _nogo_ansatz(max_degree, include_order_zero)
    rows, rhs, tags = [], [], []
    for rel in relations:
        r_, b_, t_ = _nogo_relation(max_degree, include_order_zero, rel)
        rows += r_
        rhs += b_
        tags += t_
    return unknowns, rows, rhs, tags


def _drf(unknowns, rows, rhs, max_degree):
    """d_r f on the solution set of a subsystem, as a polynomial.

    Returns None if the subsystem is infeasible or d_r f is not uniquely
    determined (some kernel vector moves it).
    """
    sol = solve_linear(rows, rhs, ncols=len(unknowns))
    if not sol.feasible:
        return None
    targets = {}
    for idx, (slot, m) in enumerate(unknowns):
        if slot != "f" or not m.get("r"):
            continue
        key = tuple(sorted(dict(m, r=m["r"] - 1).items()))
        targets.setdefault(key, []).append((idx, m["r"]))
    out = Poly.const(0)
    for key, lst in targets.items():
        if any(kv[idx] for kv in sol.kernel for idx, _ in lst):
            return None
        val = sum((sol.particular[idx] * c for idx, c in lst), ZERO)
        if val:
            out = out + Poly.monomial(dict(key), val)
    return out


def nogo_solve(max_degree: int = 4, include_order_zero: bool = True) -> NoGoResult:
    """Polynomial ansatz for L_2^eps and the three constraints of the no-go theorem."""
    if max_degree < 3:
        raise ValueError("max_degree must be >= 3")
    unknowns, rows, rhs, tags = _nogo_system(max_degree, include_order_zero, (1, 2, 3))
    sol = solve_linear(rows, rhs, ncols=len(unknowns))
    witness = None
    if not sol.feasible:
        witness = {}
        for y, tag in zip(sol.witness, tags):
            if y:
                witness[tag] = y
    u1, r1, b1, _ = _nogo_system(max_degree, include_order_zero, (1,))
    u3, r3, b3, _ = _nogo_system(max_degree, include_order_zero, (2, 3))
    ur, rr, br, _ = _nogo_system(max_degree, include_order_zero, (1, 2))
    relaxed = solve_linear(rr, br, ncols=len(ur))
    return NoGoResult(
        status=sol.status,
        rank=sol.rank,
        unknowns=len(unknowns),
        equations=len(rows),
        witness=witness,
        drf_relation1=_drf(u1, r1, b1, max_degree),
        drf_relation3=_drf(u3, r3, b3, max_degree),
        relaxed_status=relaxed.status,
    )


# contact geometry -------------------------------------------------------------------------

COORDS = ("t", "r", "zeta")


@dataclass(frozen=True)
class OneForm:
    comps: tuple  # coefficients of (dt, dr, dzeta)

    @classmethod
    def of(cls, **kw):
        return cls(tuple(Poly.coerce(kw.get(c, 0)) for c in COORDS))

    def d(self) -> dict:
        """Exterior derivative as {(i, j): coeff} for i < j (dx_i ^ dx_j)."""
        out = {}
        for i, j in itertools.combinations(range(3), 2):
            out[(i, j)] = self.comps[j].diff(COORDS[i]) - self.comps[i].diff(COORDS[j])
        return out

    def __add__(self, o):
        return OneForm(tuple(a + b for a, b in zip(self.comps, o.comps)))

    def interior(self, X: dict) -> Poly:
        return sum((X.get(c, Poly.const(0)) * a for c, a in zip(COORDS, self.comps)), Poly.const(0))


def exact(f: Poly) -> OneForm:
    return OneForm(tuple(f.diff(c) for c in COORDS))


def interior_two(form: dict, X: dict) -> OneForm:
    comps = [Poly.const(0)] * 3
    for (i, j), c in form.items():
        Xi = X.get(COORDS[i], Poly.const(0))
        Xj = X.get(COORDS[j], Poly.const(0))
        comps[j] = comps[j] + c * Xi
        comps[i] = comps[i] - c * Xj
    return OneForm(tuple(comps))


def lie_derivative(alpha: OneForm, X: dict) -> OneForm:
    """Cartan: L_X alpha = d(i_X alpha) + i_X d alpha."""
    return exact(alpha.interior(X)) + interior_two(alpha.d(), X)


CONTACT_ALPHA = OneForm.of(r=r, t=-2 * IU * zeta)


def proportionality(beta: OneForm, alpha: OneForm):
    """f with beta = f alpha, or None."""
    f = None
    for b, a in zip(beta.comps, alpha.comps):
        if a.is_zero():
            if not b.is_zero():
                return None
            continue
        try:
            q = b.divexact(a)
        except ArithmeticError:
            return None
        if f is None:
            f = q
        elif f != q:
            return None
    return f if f is not None else Poly.const(0)


def contact_check(n_window: int = 5) -> list:
    """Conditions (i)-(iii) for the vector-field part of every L_n, L_n^eps."""
    out = []
    for n in range(-n_window, n_window + 1):
        for lab, op in ((f"L({n})", jrep_L(n)), (f"L({n})^e", jrep_Le(n))):
            X = op.vector_field()
            beta = lie_derivative(CONTACT_ALPHA, X)
            f = proportionality(beta, CONTACT_ALPHA)
            zeta_free = all("zeta" not in c.variables() for c in X.values())
            dt_beta = exact(X.get("t", Poly.const(0)))
            cond3 = proportionality(dt_beta, OneForm.of(t=1)) is not None
            out.append({"label": lab, "f": f, "cond1": f is not None, "cond2": zeta_free, "cond3": cond3})
    return out


__all__ = [
    "DiffOp", "Realization", "REALIZATIONS", "get_realization", "zeta_physical", "ZETA_DICTIONARY",
    "jrep_L", "jrep_Le", "fixed_L", "fixed_Le", "verify_realization", "verify_W_realization",
    "verify_zeta_alt1", "verify_zeta_sch1", "casimir_parts", "casimir_image", "PRINTED_CASIMIR",
    "PRINTED_CASIMIR_TEXT", "schrodinger_operator", "expand_in_basis", "nogo_solve", "NoGoResult",
    "OneForm", "exact", "interior_two", "lie_derivative", "CONTACT_ALPHA", "proportionality", "contact_check",
    "t", "r", "zeta", "M", "x", "gamma", "A", "IU", "Dt", "Dr", "Dz", "DM", "lvar",
]
