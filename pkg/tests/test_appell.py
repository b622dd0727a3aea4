import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from alt1.appell import (PRINTED_EXAMPLE2, MomentSequence, appell_conditions, appell_from_wick, appell_polynomials,
                         example2_check, hermite_check, hermite_e, load_moments, shifted_moment_system, wick_product)
from alt1.kernel import Poly

from conftest import sym

t, xs = sympy.symbols("t x")
N = 6


def generating_function_oracle(moments_sym, n_max):
    """P_n from exp(t x) / E exp(t X) = sum P_n t^n / n!."""
    mgf = 1 + sum(moments_sym[g] * t ** g / sympy.factorial(g) for g in range(1, n_max + 1))
    ser = sympy.series(sympy.exp(t * xs) / mgf, t, 0, n_max + 1).removeO()
    return [sympy.expand(ser.coeff(t, n) * sympy.factorial(n)) for n in range(n_max + 1)]


def test_appell_formal_moments_match_generating_function():
    ms = {g: sympy.Symbol(f"m{g}") for g in range(1, N + 1)}
    ref = generating_function_oracle(ms, N)
    got = appell_polynomials(N, MomentSequence())
    for n in range(N + 1):
        assert sympy.expand(sym(got[n]) - ref[n]) == 0, n


def test_centered_appell_p4():
    P = appell_polynomials(4, MomentSequence.centered())
    m2, m3, m4 = (Poly.var(f"m{g}") for g in (2, 3, 4))
    x = Poly.var("x")
    assert P[4] == x ** 4 - 6 * m2 * x ** 2 - 4 * m3 * x + 6 * m2 ** 2 - m4


def test_appell_conditions_symbolic():
    ms = MomentSequence()
    assert appell_conditions(appell_polynomials(8, ms), ms) == []


@settings(max_examples=20, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=6, max_size=6))
def test_appell_conditions_numeric(vals):
    ms = MomentSequence([str(v) for v in vals], formal=False)
    P = appell_polynomials(6, ms)
    assert appell_conditions(P, ms) == []


def test_hermite_specialisation():
    r = hermite_check(8)
    assert r.mismatches == []
    for n, p in enumerate(hermite_e(8)):
        ref = sympy.expand(2 ** sympy.Rational(-n, 2) * sympy.hermite(n, xs / sympy.sqrt(2)))
        assert sympy.expand(sym(p) - ref) == 0


def test_gaussian_p4_pretty():
    assert appell_polynomials(4, MomentSequence.gaussian(4))[4].pretty() == "x⁴ − 6x² + 3"


def test_wick_products():
    w2 = wick_product(2)
    assert w2.consistent
    assert str(w2.as_poly()) == str(sym_free_wick2())
    for k in range(1, 6):
        w = wick_product(k)
        assert w.consistent and w.expectation().is_zero()


def sym_free_wick2():
    x1, x2 = Poly.var("x1"), Poly.var("x2")
    e1, e2, e12 = Poly.var("E[1]"), Poly.var("E[2]"), Poly.var("E[1,2]")
    return x1 * x2 - e1 * x2 - e2 * x1 + e1 * e2 * 2 - e12


def test_wick_derivative_rule():
    w = wick_product(3)
    p = w.as_poly()
    # d/dx_i <X_1 ... X_k> = <product without X_i>
    lower = wick_product(2, labels=[2, 3]).as_poly(names=["x2", "x3"])
    assert p.diff("x1") == lower


def test_appell_equals_wick_on_diagonal():
    for n in range(6):
        assert appell_from_wick(n) == appell_polynomials(5)[n]


def test_example2_rows():
    r = example2_check()
    assert set(r.matches) == {0, 1, 2, 3, 5}
    assert [d[0] for d in r.discrepancies] == [4]


def test_shifted_moment_system():
    P = shifted_moment_system(4)
    x, mu1, mu2 = Poly.var("x"), Poly.var("mu1"), Poly.var("mu2")
    assert P[2] == x ** 2 + 2 * mu1 * x + mu2
    for n in range(1, 5):
        assert P[n].diff("x") == P[n - 1] * n


def test_load_moments(tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"moments": ["0", "1", "0", "3"], "joint": [{"indices": [1, 2], "value": "1/2"}]}))
    ms = load_moments(f)
    assert ms.m(4) == Poly.const(3)
    assert ms.joint_moment([2, 1]) == Poly.const(Fraction(1, 2))
    with pytest.raises(ValueError):
        ms.m(5)


def test_load_moments_rejects_floats(tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"moments": [0, 1.0]}))
    with pytest.raises(ValueError):
        load_moments(f)
