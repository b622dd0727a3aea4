from fractions import Fraction

import numpy as np
import pytest
import sympy

from alt1.grouplaw import (CORRECTED_PROP7, ETA, PRINTED_G, PRINTED_PI_DDAG,
                           PRINTED_PI_STAR, PRINTED_PROP7, PRINTED_REP, REPAIRED_REP, check_pi_identity, compare_pi,
                           extract_coordinates, extraction_check, group_element, group_inverse, group_product_check,
                           leibniz_group_law, matrix_casimir, pi_at_zero, pi_matrices, repair_matrix_rep,
                           splitting_flow_test, verify_matrix_rep)
from alt1.kernel import Matrix, Poly

from conftest import sym

B1, B2, V1, V2 = sympy.symbols("B1 B2 V1 V2")
As = sympy.symbols("A1:7")


def smat(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sym(m[i, j]))


def sympy_g(coords):
    """Ordered product of one-parameter subgroups, computed with sympy's matrix exponential."""
    g = sympy.eye(4)
    for k, lab in enumerate(ETA):
        g = g * (coords[k] * smat(REPAIRED_REP[lab])).exp()
    return g.applyfunc(sympy.simplify)


# matrix representation ---------------------------------------------------------------

def test_printed_rep_fails_only_on_X_minus_1():
    bad = verify_matrix_rep(PRINTED_REP)
    assert bad and all("X-1" in (a, b) for a, b, _ in bad)
    assert len(bad) == 5


def test_repaired_rep_is_unique_and_correct():
    assert verify_matrix_rep(REPAIRED_REP) == []
    X = smat(REPAIRED_REP["X-1"])
    E21, E43 = sympy.zeros(4), sympy.zeros(4)
    E21[1, 0] = 1
    E43[3, 2] = 1
    assert X == -(E21 + E43)


def test_repaired_rep_brackets_via_sympy():
    rep = {k: smat(v) for k, v in REPAIRED_REP.items()}
    for n in (-1, 0, 1):
        for m in (-1, 0, 1):
            if abs(n + m) > 1:
                continue
            c = rep[f"X{n}"] * rep[f"Y{m}"] - rep[f"Y{m}"] * rep[f"X{n}"]
            assert c == (n - m) * rep[f"Y{n + m}"]
            c = rep[f"X{n}"] * rep[f"X{m}"] - rep[f"X{m}"] * rep[f"X{n}"]
            assert c == (n - m) * rep[f"X{n + m}"]


def test_matrix_casimir():
    S0, S1, S = matrix_casimir()
    ref = sympy.zeros(4)
    ref[0, 2] = ref[1, 3] = sympy.Rational(-3, 2)
    assert smat(S0) == ref
    assert S1.is_zero()
    for m in REPAIRED_REP.values():
        assert S.commutator(m).is_zero()


# group elements -------------------------------------------------------------------

def test_group_element_matches_print_and_sympy():
    g = group_element()
    assert g == PRINTED_G
    A1, A2, A3, A4, A5, A6 = As
    ref = sympy_g(As)
    E = sympy.Symbol("E")
    mine = smat(g).subs(E, sympy.exp(A4 / 2))
    assert (mine - ref).applyfunc(sympy.simplify) == sympy.zeros(4)


def test_group_inverse():
    prod = group_element().matmul(group_inverse())
    assert prod == Matrix.identity(4, Poly.const(1), Poly.const(0))


def test_product_matrix_matches_print():
    assert group_product_check() == []


def test_extraction_recovers_coordinates():
    assert extraction_check(1) == []
    # the sign-flipped A5 formula returns A5 + A3*A6 -- checked independently here
    g = sympy_g(As)
    wrong = -g[1, 2] / g[1, 1] - g[1, 3] * g[1, 0] / g[1, 1] ** 2
    assert sympy.simplify(wrong - (As[4] + As[2] * As[5])) == 0
    assert extraction_check(-1) == [5]


def test_corrected_group_law_sympy_oracle():
    rep = {k: smat(v) for k, v in REPAIRED_REP.items()}
    P = (B1 * rep["Y-1"] + B2 * rep["X-1"]).exp() * (V1 * rep["Y1"] + V2 * rep["X1"]).exp()
    w = 1 - B2 * V2
    coords = [
        (B1 * V2 ** 2 + V1) / w ** 2,
        V2 / w,
        -2 * (B1 * V2 + B2 * V1) / w,
        2 * sympy.log(w),
        (B1 + B2 ** 2 * V1) / w ** 2,
        B2 / w,
    ]
    assert (sympy_g(coords) - P).applyfunc(sympy.simplify) == sympy.zeros(4)
    # printed A1 (single power of w) and A4 = ln(w) do not reproduce the product
    printed = list(coords)
    printed[0], printed[3] = (B1 * V2 ** 2 + V1) / w, sympy.log(w)
    assert (sympy_g(printed) - P).applyfunc(sympy.simplify) != sympy.zeros(4)


def test_leibniz_group_law_report():
    r = leibniz_group_law()
    assert r.product_mismatches == []
    assert r.corrected_holds
    assert all(r.corrected_slots_match.values())
    assert sorted(str(d[0]) for d in r.discrepancies) == ["1", "5", "eA4"]
    assert not r.two_slot_repair_holds


# pi matrices --------------------------------------------------------------------

@pytest.fixture(scope="module")
def pi():
    return pi_matrices()


def test_pi_identities(pi):
    ident = check_pi_identity(pi)
    assert not ident["star"] and not ident["ddag"]
    assert pi_at_zero(pi)


def test_pi_star_matches_print(pi):
    assert compare_pi(pi.pi_star, PRINTED_PI_STAR) == []


def test_pi_ddag_differs_from_print_in_one_entry(pi):
    diffs = compare_pi(pi.pi_ddag, PRINTED_PI_DDAG)
    assert len(diffs) == 1
    i, j, computed, printed = diffs[0]
    assert (i, j) == (3, 1)
    assert computed == -Poly.var("A2") and printed == 0


# numeric flow ---------------------------------------------------------------------

@pytest.mark.parametrize("which", ["star", "ddag"])
def test_splitting_flow(pi, which):
    alpha = [Fraction(1, 3), Fraction(-1, 2), Fraction(1, 4), Fraction(1, 5), Fraction(-1, 3), Fraction(1, 2)]
    assert splitting_flow_test(alpha, 1000, which, pi) < 1e-9


def test_flow_detects_wrong_pi(pi):
    from alt1.grouplaw import PiMatrices
    broken = PiMatrices(pi.pi_star, PRINTED_PI_DDAG)
    alpha = [Fraction(1, 2)] * 6
    assert splitting_flow_test(alpha, 200, "ddag", broken) > 1e-6


def _vector_field_on_g(M, row, g):
    E = sympy.Symbol("E")
    out = sympy.zeros(4)
    for j in range(6):
        out += sym(M[row][j]).subs(E, sympy.exp(As[3] / 2)) * g.diff(As[j])
    return out.applyfunc(sympy.simplify)


def test_pi_defining_identities_sympy_oracle(pi):
    """sum_j pi_ddag[i][j] dg/dA_j = eta_i g and sum_j pi_star[i][j] dg/dA_j = g eta_i."""
    g = sympy_g(As)
    Z = sympy.zeros(4)
    for row, lab in enumerate(ETA):
        eta = smat(REPAIRED_REP[lab])
        assert (_vector_field_on_g(pi.pi_ddag, row, g) - eta * g).applyfunc(sympy.simplify) == Z
        assert (_vector_field_on_g(pi.pi_star, row, g) - g * eta).applyfunc(sympy.simplify) == Z
    # the printed third row of pi_ddag violates the identity
    eta3 = smat(REPAIRED_REP[ETA[2]])
    assert (_vector_field_on_g(PRINTED_PI_DDAG, 2, g) - eta3 * g).applyfunc(sympy.simplify) != Z
