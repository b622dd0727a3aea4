import itertools
from fractions import Fraction

import pytest
import sympy

from alt1.diffop import (PRINTED_CASIMIR, Dr, Dt, Dz, DiffOp, casimir_image, contact_check, get_realization,
                         nogo_solve, verify_W_realization, verify_zeta_alt1, verify_zeta_sch1, zeta_physical)
from alt1.kernel import Poly

from conftest import sym

T, R, Z, X, G, A = sympy.symbols("t r zeta x gamma A")
f = sympy.Function("f")(T, R, Z)
t = Poly.var("t")


def apply(op: DiffOp, g):
    """Independent action of an operator on a sympy expression."""
    out = 0
    for d, c in op.terms.items():
        h = g
        for v, n in d:
            h = sympy.diff(h, sympy.Symbol(v), n)
        out += sym(c) * h
    return out


def test_normal_ordering_leibniz():
    assert str(Dt.commutator(DiffOp.mul(t) * Dt)) == "d_t"
    op = Dt * DiffOp.mul(t ** 2)
    assert sympy.expand(apply(op, f) - sympy.diff(T ** 2 * f, T)) == 0


def test_composition_matches_sympy():
    ops = zeta_physical()
    a, b = ops["X1"], ops["V+"]
    lhs = apply(a * b, f)
    rhs = apply(a, apply(b, f))
    assert sympy.expand(lhs - rhs) == 0


def test_zeta_representations_close():
    assert verify_zeta_alt1() == []
    assert verify_zeta_sch1() == []


@pytest.mark.parametrize("name", ["contact_J", "fixed_mass"])
def test_W_realizations(name):
    assert verify_W_realization(get_realization(name), 8) == []


def test_contact_J_W_bracket_by_sympy():
    rep = get_realization("contact_J")
    for n, m in [(2, -1), (1, 3), (-2, 0)]:
        a, b = rep(f"L({n})"), rep(f"L({m})^e")
        comm = apply(a, apply(b, f)) - apply(b, apply(a, f))
        target = (n - m) * apply(rep(f"L({n + m})^e"), f)
        assert sympy.simplify(comm - target) == 0


@pytest.mark.parametrize("name", ["zeta_standard", "contact_J", "fixed_mass"])
def test_casimir_commutes_sympy(name):
    rep = get_realization(name)
    S, residuals = casimir_image(rep)
    assert residuals == {} or not residuals
    for lab, op in rep.alt1().items():
        comm = apply(S, apply(op, f)) - apply(op, apply(S, f))
        assert sympy.simplify(comm) == 0, lab


def test_casimir_zeta_equals_printed():
    S, _ = casimir_image(get_realization("zeta_standard"))
    assert S == PRINTED_CASIMIR["zeta_standard"]
    assert S.pretty() == "−2𝕚t²∂t∂ζ − t²∂r² − 𝕚t(2x − 1)∂ζ"


def test_casimir_contact_J_derived_form():
    S, _ = casimir_image(get_realization("contact_J"))
    assert S.pretty() == "(1/4)∂ζ² + (𝕚/2)A(x − 2)∂ζ"
    # the printed expression differs only in the sign of the second-order part
    diff = S - PRINTED_CASIMIR["contact_J"]
    assert diff == Dz * Dz * Fraction(1, 2)


def test_casimir_fixed_mass_is_constant():
    S, _ = casimir_image(get_realization("fixed_mass"))
    assert S.order() == 0
    assert sympy.expand(sym(S.terms[()]) + G * (2 * A * X - 2 * A + G)) == 0


def test_nogo_certificate():
    r = nogo_solve(4, True)
    assert r.status == "infeasible"
    assert r.witness is not None
    assert "6" in str(r.drf_relation1) and "t" in str(r.drf_relation1)


def test_contact_conditions():
    rows = contact_check(5)
    assert len(rows) == 22
    assert all(r["cond1"] and r["cond2"] and r["cond3"] for r in rows)
