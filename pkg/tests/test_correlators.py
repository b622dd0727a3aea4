import copy

import pytest

from alt1.correlators import (M1, ResidualEntry, ResidualReport, covariance_scan, fixed1, fixed3,
                              fixed_mass_correlator_check, fourier_transport, phi_j, phi_st, scan_phi_j, scan_phi_st,
                              spot_check, transported_standard, zeta_phase_on_phi_j)
from alt1.diffop import Dr, Dz, DiffOp, get_realization, zeta_physical
from alt1.kernel import I, Poly, RationalFn


@pytest.fixture(scope="module")
def st_report():
    return scan_phi_st().by_generator()


def test_phi_st_translations_and_mass(st_report):
    for g in ("Y-1/2", "Y1/2", "M0", "X0", "X1"):
        assert st_report[g].classification == "zero", g


def test_phi_st_dilatation_gives_ode(st_report):
    for g in ("D", "N", "V+"):
        e = st_report[g]
        assert e.classification == "ode"
        assert e.constraint == "u*f'(u) + (1/2*x1 + 1/2*x2)*f(u) = 0"


def test_phi_st_time_translation_needs_equal_dimensions(st_report):
    e = st_report["X-1"]
    assert e.classification == "other"
    assert set(e.residual) == {0}
    assert e.residual[0].subs({"x2": Poly.var("x1")}).is_zero()


def test_phi_j_contact_covariance():
    r = scan_phi_j().by_generator()
    assert len(r) == 6
    assert all(e.classification == "zero" for e in r.values())
    m0 = zeta_phase_on_phi_j()
    assert set(m0.residual) == {1}


def test_fourier_transport_rules():
    z = Poly.var("zeta")
    assert fourier_transport(Dz) == DiffOp.mul(Poly.const(I) * Poly.var("M"))
    assert fourier_transport(DiffOp.mul(z)) == DiffOp.d("M") * I
    op = transported_standard()["Y1/2"]
    t, r, M = Poly.var("t"), Poly.var("r"), Poly.var("M")
    assert op == -(t * Dr) - DiffOp.mul(r * M)


def test_fixed_mass_items():
    rep = fixed_mass_correlator_check()
    item1 = rep.reports["item1"].by_generator()
    assert item1["Y1/2"].classification == "zero"
    assert item1["Y-1/2"].classification == "zero"
    assert all(e.classification == "zero" for e in rep.reports["item2"].entries)
    item3 = rep.reports["item3"].by_generator()
    assert item3["X0"].residual == {0: RationalFn(-Poly.var("x1"))}
    assert sorted(rep.skipped["item1"]) == ["D", "N", "V+", "V-", "W"]


def test_spot_check_agrees_on_phi_st():
    gens = {k: v for k, v in zeta_physical().items() if k in ("D", "X-1", "Y1/2")}
    rep = covariance_scan(gens, phi_st())
    assert spot_check(rep, gens, phi_st(), points=20) == []


def test_spot_check_agrees_on_item1():
    ts = transported_standard()
    gens = {k: ts[k] for k in ("Y1/2", "Y-1/2")}
    p1, p2 = {"M": M1}, {"M": -M1}
    rep = covariance_scan(gens, fixed1(), p1, p2)
    assert spot_check(rep, gens, fixed1(), p1, p2, points=20) == []


def test_spot_check_catches_wrong_residual():
    gens = {"D": zeta_physical()["D"]}
    rep = covariance_scan(gens, phi_st())
    bad = copy.deepcopy(rep)
    e = bad.entries[0]
    e.residual = dict(e.residual)
    e.residual[0] = e.residual[0] + RationalFn(Poly.var("x1"), Poly.var("t1"))
    assert spot_check(bad, gens, phi_st(), points=5)
    # dropping a residual entirely is also noticed
    bad.entries[0] = ResidualEntry("D", {}, "zero")
    assert spot_check(bad, gens, phi_st(), points=5)


def test_fixed3_under_fixed_mass_rep():
    rep = covariance_scan(get_realization("fixed_mass").alt1(), fixed3()).by_generator()
    assert rep["X-1"].classification == "zero"
    assert rep["Y-1"].classification == "zero"
