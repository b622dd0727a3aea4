"""The 4x4 representation, group elements in coordinates of the second kind,
the Leibniz group law and the pi-matrices (dual representations).

The coordinate A4 never appears bare: only the unit E = exp(A4/2) does, with
d/dA4 acting on E**k as multiplication by k/2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .kernel import Matrix, Poly, RationalFn, nilpotent_exp, rational_eq, solve_linear
from .kernel.scalar import ZERO, as_scalar
from .liealg import ALT1_BASIS, make_alt1

half = Fraction(1, 2)
ETA = ["Y1", "X1", "Y0", "X0", "Y-1", "X-1"]  # eta_1 .. eta_6

E = Poly.var("E", laurent=True)
A = {k: Poly.var(f"A{k}") for k in (1, 2, 3, 5, 6)}
B1, B2, V1, V2 = (Poly.var(n) for n in ("B1", "B2", "V1", "V2"))


def _E(i, j, c=1) -> Matrix:
    return Matrix.unit(4, i, j, c).to_poly()


def _zero4() -> Matrix:
    return Matrix.zeros(4, zero=Poly.const(0))


PRINTED_REP = {
    "Y-1": _E(2, 3, -1),
    "Y0": _E(1, 3, -half) + _E(2, 4, half),
    "Y1": _E(1, 4),
    "X-1": _E(2, 2, -1) + _E(4, 3, -1),
    "X0": _E(1, 1, -half) + _E(2, 2, half) + _E(3, 3, -half) + _E(4, 4, half),
    "X1": _E(1, 2) + _E(3, 4),
}


def _bracket_target(alg, rep, a, b) -> Matrix:
    out = _zero4()
    for lab, c in alg.bracket(a, b).items():
        out = out + rep[lab] * c
    return out


def verify_matrix_rep(rep=None) -> list:
    """Pairs (a, b) whose matrix commutator differs from the alt1 bracket."""
    rep = rep or PRINTED_REP
    alg = make_alt1()
    bad = []
    for a, b in itertools.combinations(ALT1_BASIS, 2):
        lhs = rep[a].commutator(rep[b])
        rhs = _bracket_target(alg, rep, a, b)
        if lhs != rhs:
            bad.append((a, b, lhs - rhs))
    return bad


def repair_matrix_rep(label: str = "X-1", rep=None) -> dict:
    """Solve for the matrix of ``label`` keeping the other five fixed."""
    rep = dict(rep or PRINTED_REP)
    alg = make_alt1()
    rows, rhs = [], []
    for b in ALT1_BASIS:
        if b == label:
            continue
        target = _zero4()
        cx = ZERO
        for lab, c in alg.bracket(label, b).items():
            if lab == label:
                cx = c.constant_term()
            else:
                target = target + rep[lab] * c
        B = rep[b]
        for i, j in itertools.product(range(4), repeat=2):
            row = [ZERO] * 16
            for p, q in itertools.product(range(4), repeat=2):
                c = ZERO
                if p == i:
                    c = c + B.data[q][j].constant_term()
                if q == j:
                    c = c - B.data[i][p].constant_term()
                if (p, q) == (i, j):
                    c = c - cx
                row[4 * p + q] = c
            rows.append(row)
            rhs.append(target.data[i][j].constant_term())
    sol = solve_linear(rows, rhs)
    if not sol.feasible:
        raise ValueError(f"no matrix for {label} satisfies the brackets")
    if sol.kernel:
        raise ValueError(f"matrix for {label} is not unique")
    rep[label] = Matrix([[Poly.const(sol.particular[4 * i + j]) for j in range(4)] for i in range(4)])
    return rep


REPAIRED_REP = repair_matrix_rep()


def matrix_casimir(rep=None, Apar=None):
    """(S0, S1, S_hat) for a matrix representation."""
    rep = rep or REPAIRED_REP
    Apar = Poly.var("A") if Apar is None else Apar
    S0 = rep["X-1"].matmul(rep["Y1"]) + rep["X1"].matmul(rep["Y-1"]) - rep["X0"].matmul(rep["Y0"]) * 2
    S1 = rep["Y-1"].matmul(rep["Y1"]) - rep["Y0"].matmul(rep["Y0"])
    return S0, S1, S0 * Apar + S1


# exponentials ------------------------------------------------------------------------

def exact_exp(m: Matrix, parameter=None) -> Matrix:
    """exp(parameter * m) for nilpotent m, or diagonal m with entries in {+-1/2}.

    A diagonal generator is only exponentiated along A4, giving powers of E.
    """
    m = m.to_poly()
    if m.nilpotency_index() is not None:
        p = Poly.coerce(parameter) if parameter is not None else Poly.const(1)
        return nilpotent_exp(m * p)
    if m.is_diagonal():
        diag = []
        for i in range(m.rows):
            c = m.data[i][i].constant_term() * 2
            if not c.is_real() or c.re.denominator != 1:
                raise ValueError("diagonal entries must lie in (1/2)Z")
            diag.append(E ** int(c.re))
        out = _zero4() if m.rows == 4 else Matrix.zeros(m.rows, zero=Poly.const(0))
        for i, d in enumerate(diag):
            out.data[i][i] = d
        return out
    raise ValueError("matrix is neither nilpotent nor diagonal")


def group_element(coords=None, rep=None) -> Matrix:
    """g(A) = exp(A1 eta1) ... exp(A6 eta6); A4 enters only through E."""
    rep = rep or REPAIRED_REP
    coords = coords or {k: v for k, v in A.items()}
    g = None
    for k, lab in enumerate(ETA, start=1):
        if k == 4:
            f = exact_exp(rep[lab])
        else:
            f = exact_exp(rep[lab], coords.get(k, 0))
        g = f if g is None else g.matmul(f)
    return g


def group_inverse(coords=None, rep=None) -> Matrix:
    rep = rep or REPAIRED_REP
    coords = coords or {k: v for k, v in A.items()}
    g = None
    for k, lab in reversed(list(enumerate(ETA, start=1))):
        if k == 4:
            f = exact_exp(rep[lab]).map(lambda p: p.subs({"E": E ** -1}))
        else:
            f = exact_exp(rep[lab], -Poly.coerce(coords.get(k, 0)))
        g = f if g is None else g.matmul(f)
    return g


def _printed_g():
    e4 = E ** 2
    A1, A2, A3, A5, A6 = A[1], A[2], A[3], A[5], A[6]
    rows = [
        [1 - A2 * A6 * e4, A2 * e4, -(A2 * A5 + A2 * A3 * A6 * half + A1 * A6) * e4 - A3 * half, (A2 * A3 * half + A1) * e4],
        [-A6 * e4, e4, -(A5 + A3 * A6 * half) * e4, A3 * e4 * half],
        [Poly.const(0), Poly.const(0), 1 - A2 * A6 * e4, A2 * e4],
        [Poly.const(0), Poly.const(0), -A6 * e4, e4],
    ]
    return Matrix([[E ** -1 * Poly.coerce(x) for x in r] for r in rows])


PRINTED_G = _printed_g()


def d_dA(p, mu: int):
    """Partial derivative in A_mu; for mu = 4 it acts through E = exp(A4/2)."""
    if isinstance(p, RationalFn):
        if mu != 4:
            return p.diff(f"A{mu}")
        # quotient rule with the E-derivative
        num = d_dA(p.num, 4)
        out = RationalFn(num, p.den)
        for f, k in p.den:
            df = d_dA(f, 4)
            if df.is_zero():
                continue
            out = out - RationalFn(p.num * df * k) / RationalFn(f ** (k + 1)) / RationalFn(1, ()).__class__(1, tuple((g, j) for g, j in p.den if g != f) or ())
        return out
    if mu != 4:
        return p.diff(f"A{mu}")
    return Poly({m: c * Fraction(dict(m).get("E", 0), 2) for m, c in p.terms.items()
                 if dict(m).get("E", 0)}, p.laurent)


def _decompose(m: Matrix) -> list:
    """Coordinates of a Lie-algebra matrix along eta_1..eta_6 (checked)."""
    coeffs = [m.data[0][3], m.data[0][1], m.data[1][3] * 2, m.data[1][1] * 2, -m.data[1][2], -m.data[1][0]]
    rebuilt = _zero4()
    for c, lab in zip(coeffs, ETA):
        rebuilt = rebuilt + REPAIRED_REP[lab] * c
    if rebuilt != m:
        raise ValueError("matrix is not in the span of the generators")
    return coeffs


def _invert(rows):
    """Inverse of a square matrix of Polys; entries returned as Poly when possible."""
    n = len(rows)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        sol = solve_linear(rows, e)
        if sol.status != "solution":
            raise ValueError("singular matrix")
        cols.append(sol.particular)
    out = [[cols[j][i] for j in range(n)] for i in range(n)]
    return [[_as_poly(x) for x in r] for r in out]


def _as_poly(x):
    if isinstance(x, RationalFn):
        if x.is_poly():
            return x.num
        # denominators that are monomials in E are units
        den = x.denominator()
        try:
            return x.num * den.inverse()
        except ArithmeticError:
            return x
    return Poly.coerce(x)


@dataclass
class PiMatrices:
    pi_star: list
    pi_ddag: list


def pi_matrices() -> PiMatrices:
    """pi-matrices from the Maurer-Cartan forms.

    (d_mu g) g^{-1} = sum_i R[mu][i] eta_i  gives  pi_ddag = R^{-1};
    g^{-1} (d_mu g) = sum_i L[mu][i] eta_i  gives  pi_star = L^{-1}.
    """
    g = group_element()
    ginv = group_inverse()
    R, L = [], []
    for mu in range(1, 7):
        dg = g.map(lambda p: d_dA(p, mu))
        R.append(_decompose(dg.matmul(ginv)))
        L.append(_decompose(ginv.matmul(dg)))
    return PiMatrices(pi_star=_invert(L), pi_ddag=_invert(R))


def _pm(rows):
    return [[Poly.coerce(x) for x in r] for r in rows]


def _printed_pi():
    A1, A2, A3, A5, A6 = A[1], A[2], A[3], A[5], A[6]
    em = E ** -2
    ddag = _pm([
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [-A1, -A2, 0, 1, 0, 0],
        [A2 ** 2, 0, -2 * A2, 0, em, 0],
        [2 * A1 * A2, A2 ** 2, -2 * A1, -2 * A2, -A3 * em, em],
    ])
    ddag_column = _pm([
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [-A1, -A2, 0, -1, 0, 0],
        [A2 ** 2, 0, -2 * A2, em, 0, 0],
        [2 * A1 * A2, A2 ** 2, -2 * A1, -2 * A2, -A3 * em, -em],
    ])
    star = _pm([
        [em, 0, -2 * A6, 0, A6 ** 2, 0],
        [-A3 * em, em, -2 * A5, -2 * A6, 2 * A5 * A6, A6 ** 2],
        [0, 0, 1, 0, -A6, 0],
        [0, 0, 0, 1, -A5, -A6],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ])
    return star, ddag, ddag_column


PRINTED_PI_STAR, PRINTED_PI_DDAG, PRINTED_ETA_DDAG = _printed_pi()


def compare_pi(computed, printed) -> list:
    bad = []
    for i in range(6):
        for j in range(6):
            c, p = computed[i][j], printed[i][j]
            if not rational_eq(RationalFn.coerce(c), RationalFn.coerce(p)):
                bad.append((i + 1, j + 1, c, p))
    return bad


def check_pi_identity(pi: PiMatrices) -> dict:
    """eta_j g = sum pi_ddag[j][mu] d_mu g and g eta_j = sum pi_star[j][mu] d_mu g."""
    g = group_element()
    dgs = [g.map(lambda p, mu=mu: d_dA(p, mu)) for mu in range(1, 7)]
    bad = {"ddag": [], "star": []}
    for j, lab in enumerate(ETA):
        lhs_l = REPAIRED_REP[lab].matmul(g)
        lhs_r = g.matmul(REPAIRED_REP[lab])
        for kind, lhs, mat in (("ddag", lhs_l, pi.pi_ddag), ("star", lhs_r, pi.pi_star)):
            rhs = _zero4()
            for mu in range(6):
                rhs = rhs + dgs[mu] * mat[j][mu]
            if rhs != lhs:
                bad[kind].append(lab)
    return bad


def pi_at_zero(pi: PiMatrices) -> bool:
    zero = {f"A{k}": 0 for k in (1, 2, 3, 5, 6)}
    zero["E"] = 1
    for mat in (pi.pi_star, pi.pi_ddag):
        for i in range(6):
            for j in range(6):
                if mat[i][j].subs(zero) != (1 if i == j else 0):
                    return False
    return True


# coordinates and the Leibniz group law ---------------------------------------------------

def extract_coordinates(g: Matrix, a5_sign: int = 1) -> dict:
    """The six coordinate formulas; slot 4 returned as e^{A4} = g22^2 under key 'eA4'.

    ``a5_sign=-1`` selects the variant A5 = -g23/g22 - g24 g21/g22^2, which
    returns A5 + A3 A6 instead of A5.
    """
    G = lambda i, j: RationalFn.coerce(g.data[i - 1][j - 1])
    g22 = G(2, 2)
    if g22.is_zero():
        raise ZeroDivisionError("g22 = 0: outside the coordinate chart")
    return {
        1: G(1, 4) / g22 - G(1, 2) * G(2, 4) / (g22 * g22),
        2: G(1, 2) / g22,
        3: G(2, 4) * 2 / g22,
        "eA4": g22 * g22,
        5: -(G(2, 3) / g22) + G(2, 4) * G(2, 1) * a5_sign / (g22 * g22),
        6: -(G(2, 1) / g22),
    }


def extraction_check(a5_sign: int = 1) -> list:
    """Slots where the extraction formulas applied to g(A) do not return A."""
    coords = extract_coordinates(group_element(), a5_sign)
    expect = {k: RationalFn.coerce(A[k]) for k in (1, 2, 3, 5, 6)}
    expect["eA4"] = RationalFn.coerce(E ** 2)
    return [k for k in (1, 2, 3, "eA4", 5, 6) if not rational_eq(coords[k], expect[k])]


PRINTED_PRODUCT = Matrix(_pm([
    [1, V2, 0, V1],
    [-B2, 1 - B2 * V2, -B1, -B2 * V1 - B1 * V2],
    [0, 0, 1, V2],
    [0, 0, -B2, 1 - B2 * V2],
]))

_w = 1 - B2 * V2
PRINTED_PROP7 = {
    1: RationalFn(B1 * V2 ** 2 + V1, _w),
    2: RationalFn(V2, _w),
    3: RationalFn(-2 * (B1 * V2 + B2 * V1), _w),
    "eA4": RationalFn(_w),  # A4 = ln(1 - B2 V2)
    5: RationalFn(B1 - 2 * B1 * B2 * V2 - B2 ** 2 * V1, _w ** 2),
    6: RationalFn(B2, _w),
}
CORRECTED_PROP7 = dict(PRINTED_PROP7)
CORRECTED_PROP7[1] = RationalFn(B1 * V2 ** 2 + V1, _w ** 2)
CORRECTED_PROP7["eA4"] = RationalFn(_w ** 2)
CORRECTED_PROP7[5] = RationalFn(B1 + B2 ** 2 * V1, _w ** 2)
PROP7_TEXT = {
    1: ("(B1*V2^2 + V1)/(1 - B2*V2)", "(B1*V2^2 + V1)/(1 - B2*V2)^2"),
    "eA4": ("A4 = ln(1 - B2*V2)", "A4 = 2*ln(1 - B2*V2)"),
    5: ("(B1 - 2*B1*B2*V2 - B2^2*V1)/(1 - B2*V2)^2", "(B1 + B2^2*V1)/(1 - B2*V2)^2"),
}


def group_product() -> Matrix:
    left = exact_exp(REPAIRED_REP["Y-1"] * B1 + REPAIRED_REP["X-1"] * B2)
    right = exact_exp(REPAIRED_REP["Y1"] * V1 + REPAIRED_REP["X1"] * V2)
    return left.matmul(right)


def group_product_check() -> list:
    P = group_product()
    return [(i + 1, j + 1, P.data[i][j], PRINTED_PRODUCT.data[i][j])
            for i in range(4) for j in range(4) if P.data[i][j] != PRINTED_PRODUCT.data[i][j]]


def _g_at(coords: dict) -> Matrix:
    """g(A) evaluated at rational-function coordinates (E given by sqrt of e^{A4})."""
    g = group_element()
    Erf = coords["E"]
    out = []
    for row in g.data:
        new = []
        for p in row:
            acc = RationalFn(0)
            for m, c in p.terms.items():
                term = RationalFn(Poly({(): c}))
                for v, e in m:
                    val = Erf if v == "E" else coords[int(v[1:])]
                    term = term * (val ** e)
                acc = acc + term
            new.append(acc)
        out.append(new)
    return Matrix(out)


@dataclass
class Prop7Report:
    product_mismatches: list
    extracted: dict
    discrepancies: list  # (slot, printed, derived)
    corrected_holds: bool
    corrected_slots_match: dict = field(default_factory=dict)
    two_slot_repair_holds: bool = False  # only A1 and A4 corrected, A5 as printed


def leibniz_group_law() -> Prop7Report:
    P = group_product()
    coords = extract_coordinates(P)
    disc = []
    slot_ok = {}
    for slot in (1, 2, 3, "eA4", 5, 6):
        slot_ok[slot] = rational_eq(coords[slot], CORRECTED_PROP7[slot])
        if not rational_eq(coords[slot], PRINTED_PROP7[slot]):
            disc.append((slot, PRINTED_PROP7[slot], coords[slot]))
    # the corrected coordinates rebuild the product: E = exp(A4/2) = 1 - B2 V2
    def rebuilds(values):
        sub = {k: values[k] for k in (1, 2, 3, 5, 6)}
        sub["E"] = RationalFn(_w)
        rebuilt = _g_at(sub)
        return all(rational_eq(rebuilt.data[i][j], RationalFn.coerce(P.data[i][j]))
                   for i in range(4) for j in range(4))

    two_slot = dict(CORRECTED_PROP7)
    two_slot[5] = PRINTED_PROP7[5]
    return Prop7Report(group_product_check(), coords, disc, rebuilds(CORRECTED_PROP7), slot_ok, rebuilds(two_slot))


# numeric splitting-lemma flow -------------------------------------------------------------

def _compile(mat) -> callable:
    names = {f"A{k}": f"a[{k - 1}]" for k in (1, 2, 3, 5, 6)}
    names["E"] = "e"
    exprs = []
    for row in mat:
        exprs.append("[" + ", ".join(_py(x, names) for x in row) + "]")
    src = "lambda a, e: [" + ", ".join(exprs) + "]"
    return eval(src, {"__builtins__": {}})


def _py(x, names):
    if isinstance(x, RationalFn):
        return f"({x.num.to_python(names)}/{x.denominator().to_python(names)})"
    return Poly.coerce(x).to_python(names)


def _numeric_rep(rep) -> dict:
    return {k: np.array([[complex(p.constant_term()).real for p in r] for r in m.data]) for k, m in rep.items()}


def _expm_series(X: np.ndarray, terms: int = 40) -> np.ndarray:
    out = np.eye(X.shape[0])
    term = np.eye(X.shape[0])
    for n in range(1, terms):
        term = term @ X / n
        out = out + term
    return out


def _g_numeric(a: np.ndarray, rep) -> np.ndarray:
    g = np.eye(4)
    for k, lab in enumerate(ETA):
        if k == 3:
            g = g @ np.diag(np.exp(np.diag(rep[lab]) * a[3]))
        else:
            g = g @ (np.eye(4) + a[k] * rep[lab])
    return g


def splitting_flow_test(alpha, steps: int = 1000, which: str = "star", pi: PiMatrices | None = None) -> float:
    """Integrate dA/ds = alpha . pi(A) from 0 to 1 (RK4) and compare g(A(1)) to exp(X)."""
    pi = pi or pi_matrices()
    mat = pi.pi_star if which == "star" else pi.pi_ddag
    f = _compile(mat)
    al = np.array([float(Fraction(x)) for x in alpha])
    rep = _numeric_rep(REPAIRED_REP)

    def rhs(a):
        m = np.array(f(a, np.exp(a[3] / 2)), dtype=float)
        return al @ m

    a = np.zeros(6)
    h = 1.0 / steps
    for _ in range(steps):
        k1 = rhs(a)
        k2 = rhs(a + h / 2 * k1)
        k3 = rhs(a + h / 2 * k2)
        k4 = rhs(a + h * k3)
        a = a + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(a)):
            raise FloatingPointError("flow left the coordinate chart")
    X = sum(al[k] * rep[lab] for k, lab in enumerate(ETA))
    return float(np.max(np.abs(_g_numeric(a, rep) - _expm_series(X))))


__all__ = [
    "ETA", "PRINTED_REP", "REPAIRED_REP", "verify_matrix_rep", "repair_matrix_rep", "matrix_casimir",
    "exact_exp", "group_element", "group_inverse", "PRINTED_G", "d_dA", "pi_matrices", "PiMatrices",
    "PRINTED_PI_STAR", "PRINTED_PI_DDAG", "PRINTED_ETA_DDAG", "compare_pi", "check_pi_identity", "pi_at_zero",
    "extract_coordinates", "extraction_check", "PRINTED_PRODUCT", "PRINTED_PROP7", "CORRECTED_PROP7", "PROP7_TEXT",
    "group_product", "group_product_check", "leibniz_group_law", "Prop7Report", "splitting_flow_test",
]
