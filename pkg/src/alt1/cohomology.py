"""Chevalley-Eilenberg cochains in low degree and central extensions.

Elementary alternating forms are indexed by sorted index tuples; the value
of a 2-form on an unsorted pair picks up the sign of the permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .kernel import Matrix, Poly, rank, solve_linear
from .kernel.scalar import ZERO, as_scalar
from .liealg import LieAlgebra, TruncatedBracket, abelian, grassmann_tensor, jacobi_check, make_sl2, make_W


def _scalar(p) -> object:
    p = Poly.coerce(p)
    if not p.is_constant():
        raise ValueError(f"structure constant {p} is not a number")
    return p.constant_term()


def d1_matrix(alg: LieAlgebra) -> Matrix:
    """d: g* -> Lambda^2 g*, (d lambda)(e_i, e_j) = lambda([e_i, e_j])."""
    pairs = list(itertools.combinations(range(alg.dim), 2))
    rows = []
    for i, j in pairs:
        row = [ZERO] * alg.dim
        for k, c in alg.bracket_idx(i, j).items():
            row[k] = _scalar(c)
        rows.append(row)
    return Matrix(rows) if rows else Matrix([[ZERO] * alg.dim])


def d2_matrix(alg: LieAlgebra) -> Matrix:
    """d: Lambda^2 g* -> Lambda^3 g* in the elementary-form bases.

    (d alpha)(X, Y, Z) = alpha([X,Y],Z) + alpha([Y,Z],X) + alpha([Z,X],Y).
    """
    pairs = list(itertools.combinations(range(alg.dim), 2))
    col = {p: n for n, p in enumerate(pairs)}
    rows = []
    for i, j, k in itertools.combinations(range(alg.dim), 3):
        row = [ZERO] * len(pairs)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in alg.bracket_idx(a, b).items():
                if m == c:
                    continue
                key, sign = ((m, c), 1) if m < c else ((c, m), -1)
                row[col[key]] = row[col[key]] + _scalar(v) * sign
        rows.append(row)
    if not rows:
        return Matrix.zeros(0, len(pairs)) if pairs else Matrix([])
    return Matrix(rows)


@dataclass
class H2Result:
    dim_Z2: int
    dim_B2: int
    dim_H2: int
    cocycles: list = field(default_factory=list)  # basis of Z^2 as {pair: value}
    representatives: list = field(default_factory=list)  # complement of B^2 in Z^2
    rank_d1: int = 0
    rank_d2: int = 0


def h2(alg: LieAlgebra) -> H2Result:
    if alg.truncated:
        raise ValueError("h2 needs a closed (finite-dimensional) bracket table")
    pairs = list(itertools.combinations(range(alg.dim), 2))
    npairs = len(pairs)
    D1 = d1_matrix(alg)
    D2 = d2_matrix(alg)
    r1 = rank(D1) if npairs else 0
    r2 = rank(D2) if D2.rows else 0
    dimZ = npairs - r2
    if D2.rows:
        Z = solve_linear(D2).kernel
    else:
        Z = [[1 if i == j else 0 for j in range(npairs)] for i in range(npairs)]
    # coboundary space: columns of D1
    B = [[D1.data[p][k] for p in range(npairs)] for k in range(alg.dim)] if npairs else []
    reps = []
    span = [b for b in B]
    current = rank(span) if span else 0
    for z in Z:
        trial = span + [z]
        rk = rank(trial)
        if rk > current:
            reps.append(z)
            span, current = trial, rk
    label = lambda v: {(alg.basis[pairs[n][0]], alg.basis[pairs[n][1]]): as_scalar(c) for n, c in enumerate(v) if c}
    return H2Result(dimZ, r1, dimZ - r1, [label(z) for z in Z], [label(z) for z in reps], r1, r2)


def d_squared_zero(alg: LieAlgebra) -> bool:
    D1, D2 = d1_matrix(alg), d2_matrix(alg)
    if not D2.rows or not D1.rows:
        return True
    return D2.matmul(D1).is_zero()


# graded analysis of W -------------------------------------------------------------------

def _mode(label: str) -> int:
    return int(label[label.index("(") + 1: label.index(")")])


def virasoro_cocycle(a: str, b: str):
    """n(n^2-1) delta_{n+m,0} on (L_n, L_m), zero whenever an eps-generator enters."""
    if a.endswith("^e") or b.endswith("^e"):
        return ZERO
    n, m = _mode(a), _mode(b)
    return as_scalar(n ** 3 - n) if n + m == 0 else ZERO


def omega_cocycle(a: str, b: str):
    """omega(L_n, L_m^eps) = delta_{n+m,0} n(n^2-1); zero on Vect^2 and F^2."""
    ea, eb = a.endswith("^e"), b.endswith("^e")
    if ea == eb:
        return ZERO
    if ea:
        return -omega_cocycle(b, a)
    n, m = _mode(a), _mode(b)
    return as_scalar(n ** 3 - n) if n + m == 0 else ZERO


def d_of(alg: LieAlgebra, cocycle, a: str, b: str, c: str):
    """(d alpha)(a, b, c) for a cocycle given as a function of two labels."""
    total = ZERO
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for lab, v in alg.bracket(x, y).items():
            total = total + _scalar(v) * cocycle(lab, z)
    return total


def cocycle_violations(alg: LieAlgebra, cocycle) -> list:
    bad = []
    for a, b, c in itertools.combinations(alg.basis, 3):
        try:
            v = d_of(alg, cocycle, a, b, c)
        except TruncatedBracket:
            continue
        if v:
            bad.append(((a, b, c), v))
    return bad


@dataclass
class NonCoboundary:
    infeasible: bool
    witness: dict  # {(X, Y): multiplier} certifying infeasibility
    equations: int


def non_coboundary_certificate(alg: LieAlgebra, cocycle) -> NonCoboundary:
    """Try to solve lambda([X, Y]) = cocycle(X, Y) on all in-window pairs."""
    rows, rhs, tags = [], [], []
    for a, b in itertools.combinations(alg.basis, 2):
        try:
            br = alg.bracket(a, b)
        except TruncatedBracket:
            continue
        row = {alg.index[k]: _scalar(v) for k, v in br.items()}
        val = cocycle(a, b)
        if not row and not val:
            continue
        rows.append(row)
        rhs.append(val)
        tags.append((a, b))
    sol = solve_linear(rows, rhs, ncols=alg.dim)
    witness = {}
    if not sol.feasible:
        witness = {t: y for t, y in zip(tags, sol.witness) if y}
    return NonCoboundary(not sol.feasible, witness, len(rows))


def restricted_system(N: int):
    """Pairings (L_n, L_-n): lambda([L_n, L_-n]) = 2n lambda(L_0) must equal n(n^2-1).

    The same rows arise for omega on (L_n, L_-n^eps) with lambda(L_0^eps).
    Returns (rows, solution) for the single unknown lambda(L_0).
    """
    rows = [(n, 2 * n, n ** 3 - n) for n in range(1, N + 1)]
    sol = solve_linear([[r[1]] for r in rows], [r[2] for r in rows])
    return rows, sol


def graded_cocycle_check(N: int) -> dict:
    if N < 2:
        raise ValueError("window must be >= 2")
    W = make_W(N)
    out = {}
    for name, coc in (("virasoro", virasoro_cocycle), ("omega", omega_cocycle)):
        out[name] = {
            "violations": cocycle_violations(W, coc),
            "certificate": non_coboundary_certificate(W, coc),
        }
    return out


def central_extension_build(alg: LieAlgebra, cocycle, central: str = "K") -> LieAlgebra:
    """Extended algebra with [X, Y]~ = [X, Y] + cocycle(X, Y) K."""
    bad = cocycle_violations(alg, cocycle)
    if bad:
        raise ValueError(f"not a cocycle: d alpha{bad[0][0]} = {bad[0][1]}")
    ext = LieAlgebra(f"{alg.name}+{central}", list(alg.basis) + [central], central=alg.central + (central,))
    for a, b in itertools.combinations(alg.basis, 2):
        if alg.is_truncated(alg.index[a], alg.index[b]):
            ext.mark_truncated(a, b)
            continue
        res = dict(alg.bracket(a, b))
        v = cocycle(a, b)
        if v:
            res[central] = Poly.const(v)
        ext.set_bracket(a, b, res)
    return ext


# the finite computation for alt1 --------------------------------------------------------

PROP2_UNKNOWNS = {
    "a": ("L(1)", "L(-1)"),
    "a^e": ("L(1)^e", "L(-1)^e"),
    "b": ("L(1)", "L(-1)^e"),
    "b^e": ("L(1)^e", "L(-1)"),
    "c": ("L(0)", "L(0)^e"),
}

PROP2_PRINTED = [
    (("L(1)", "L(-1)", "L(0)^e"), {"c": 2, "b": 1, "b^e": -1}),
    (("L(1)^e", "L(-1)", "L(0)^e"), {"a^e": 1}),
    (("L(1)", "L(-1)^e", "L(0)^e"), {"a^e": 1}),
    (("L(1)^e", "L(-1)", "L(0)"), {"c": -2}),
]


def prop2_analysis() -> dict:
    """Graded cocycles on sl2 (x) R[eps]: d alpha as linear forms in a, a^e, b, b^e, c."""
    alg = grassmann_tensor(make_sl2())
    names = list(PROP2_UNKNOWNS)
    sym = {n: Poly.var(n.replace("^e", "e")) for n in names}

    def alpha(x, y):
        for n, (p, q) in PROP2_UNKNOWNS.items():
            if (x, y) == (p, q):
                return sym[n]
            if (y, x) == (p, q):
                return -sym[n]
        return Poly.const(0)

    forms = {}
    for trip in itertools.combinations(alg.basis, 3):
        v = Poly.const(0)
        for x, y, z in ((trip[0], trip[1], trip[2]), (trip[1], trip[2], trip[0]), (trip[2], trip[0], trip[1])):
            for lab, c in alg.bracket(x, y).items():
                v = v + c * alpha(lab, z)
        if not v.is_zero():
            forms[trip] = v

    def form_for(trip):
        # evaluate in the printed argument order (d alpha is totally antisymmetric)
        v = Poly.const(0)
        x, y, z = trip
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for lab, k in alg.bracket(a, b).items():
                v = v + k * alpha(lab, c)
        return v

    printed_ok = []
    for trip, coeffs in PROP2_PRINTED:
        expected = sum((sym[n] * k for n, k in coeffs.items()), Poly.const(0))
        printed_ok.append((trip, form_for(trip) == expected, form_for(trip), expected))
    # solve the homogeneous system
    rows = [[f.coeff(sym[n].sorted_terms()[0][0][0][0], 1).constant_term() for n in names] for f in forms.values()]
    sol = solve_linear(rows) if rows else None
    cocycle_space = [{n: c for n, c in zip(names, v) if c} for v in sol.kernel] if sol else []
    # every solution is a coboundary: lambda(L_0) = a/2, lambda(L_0^e) = b/2
    killed = []
    for v in cocycle_space:
        lam = {"L(0)": Fraction(1, 2) * v.get("a", 0), "L(0)^e": Fraction(1, 2) * v.get("b", 0)}
        ok = True
        for n, (p, q) in PROP2_UNKNOWNS.items():
            dl = sum((as_scalar(lam.get(lab, 0)) * Poly.coerce(c).constant_term()
                      for lab, c in alg.bracket(p, q).items()), ZERO)
            ok &= dl == as_scalar(v.get(n, 0))
        killed.append(ok)
    return {"forms": forms, "printed": printed_ok, "cocycle_space": cocycle_space, "killed": killed}


def algebra_by_name(name: str) -> LieAlgebra:
    from .liealg import make_alt1

    table = {"alt1": make_alt1, "sl2": make_sl2, "abelian2": lambda: abelian(2)}
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {sorted(table)}") from None


__all__ = [
    "d1_matrix", "d2_matrix", "h2", "H2Result", "d_squared_zero", "virasoro_cocycle", "omega_cocycle",
    "d_of", "cocycle_violations", "non_coboundary_certificate", "NonCoboundary", "graded_cocycle_check",
    "central_extension_build", "prop2_analysis", "algebra_by_name", "restricted_system",
]
