import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alt1.kernel import Poly
from alt1.liealg import (LieAlgebra, TruncatedBracket, abelian, adjoint, adjoint_convention_report,
                         adjoint_homomorphism_check, antisymmetry_check, contraction_check, density_action_check,
                         grassmann_tensor, jacobi_check, make_alt1, make_sl2, make_sv, make_virasoro, make_W,
                         prop1_check, two_virasoro_check)


def test_alt1_brackets_by_hand():
    alg = make_alt1()
    assert alg.bracket("X1", "X-1") == {"X0": Poly.const(2)}
    assert alg.bracket("X1", "Y-1") == {"Y0": Poly.const(2)}
    assert alg.bracket("X0", "Y1") == {"Y1": Poly.const(-1)}
    assert alg.bracket("Y1", "Y-1") == {}
    assert alg.dim == 6


def test_alt1_jacobi_all_twenty_triples():
    alg = make_alt1()
    assert len(list(itertools.combinations(alg.basis, 3))) == 20
    assert jacobi_check(alg) == []
    assert antisymmetry_check(alg)


def test_windowed_algebras_satisfy_jacobi():
    assert jacobi_check(make_sv(5)) == []
    assert jacobi_check(make_W(8)) == []
    assert jacobi_check(make_virasoro(4)) == []


def test_sv_half_integer_brackets():
    sv = make_sv(3)
    assert sv.bracket("Y(1/2)", "Y(-1/2)") == {"M(0)": Poly.const(1)}
    assert sv.bracket("L(1)", "Y(-1/2)") == {"Y(1/2)": Poly.const(1)}


def test_jacobi_detects_broken_algebra():
    alg = LieAlgebra("broken", ["a", "b", "c"])
    alg.set_bracket("a", "b", {"c": 1})
    alg.set_bracket("b", "c", {"a": 1})
    alg.set_bracket("a", "c", {"a": 1})
    assert jacobi_check(alg)


def test_truncated_brackets_raise():
    W = make_W(2)
    with pytest.raises(TruncatedBracket):
        W.bracket("L(2)", "L(1)")


def test_grassmann_tensor_eps_squares_to_zero():
    g = grassmann_tensor(make_sl2())
    assert g.bracket("L(1)^e", "L(-1)^e") == {}
    assert g.bracket("L(1)", "L(-1)^e") == {"L(0)^e": Poly.const(2)}
    assert jacobi_check(g) == []


def test_prop1_isomorphism():
    r = prop1_check()
    assert r["phi_failures"] == [] and r["abstract_failures"] == [] and r["bijective"]


def test_adjoint_is_representation():
    assert adjoint_homomorphism_check(make_alt1()) == []
    assert adjoint_homomorphism_check(make_sl2()) == []


def test_adjoint_convention_report_frozen():
    assert adjoint_convention_report() == {
        "Y-1": ["ad"], "Y0": ["ad"], "Y1": [], "X-1": [], "X0": ["ad", "ad^T"], "X1": ["ad^T"]}


def test_contraction_limit():
    r = contraction_check(5)
    assert r["bracket_mismatches"] == [] and r["jacobi"] == [] and r["limit_mismatches"] == []
    assert r["x_brackets_a_free"]


def test_density_action():
    assert density_action_check(6)["mismatches"] == []


def test_two_virasoro_central_terms():
    r = two_virasoro_check(5)
    assert r["mismatches"] == []
    plain, eps = r["brackets"][(2, -2)]
    # (n^3 - n)/12 = 1/2 at n = 2
    assert any("K" in k for k in plain) and any("K" in k for k in eps)


@given(st.integers(1, 5))
def test_W_bracket_rule(n):
    W = make_W(6)
    m = -n + 1
    assert W.bracket(f"L({n})", f"L({m})^e") == {f"L({n + m})^e": Poly.const(n - m)}


def test_abelian_has_no_brackets():
    assert abelian(3).table == {}
