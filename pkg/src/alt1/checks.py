"""Registry of verification checks.

Every check is a pure function returning a list of entries.  The first entry
carries the check id and a pass/fail status; further entries (ids with a
``/suffix``) document places where a printed formula disagrees with the
derived one, with status ``paper_discrepancy`` and both values attached.
"""

from __future__ import annotations

import fnmatch
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction


@dataclass
class CheckResult:
    id: str
    status: str  # pass | fail | paper_discrepancy
    details: list = field(default_factory=list)
    printed: str | None = None
    derived: str | None = None
    ms: float | None = None

    def to_json(self) -> dict:
        return asdict(self)


def _ok(cid, ok, *details):
    return CheckResult(cid, "pass" if ok else "fail", [str(d) for d in details])


def _disc(cid, printed, derived, *details):
    return CheckResult(cid, "paper_discrepancy", [str(d) for d in details], str(printed), str(derived))


CHECKS = {}


def check(cid):
    def deco(fn):
        CHECKS[cid] = fn
        return fn
    return deco


# Lie algebras ----------------------------------------------------------------------------

@check("jacobi.alt1")
def _jacobi_alt1():
    from .liealg import jacobi_check, make_alt1
    v = jacobi_check(make_alt1())
    return [_ok("jacobi.alt1", not v, f"violations: {len(v)}")]


@check("jacobi.sv5")
def _jacobi_sv():
    from .liealg import jacobi_check, make_sv
    v = jacobi_check(make_sv(5))
    return [_ok("jacobi.sv5", not v, f"violations: {len(v)}")]


@check("jacobi.w8")
def _jacobi_w():
    from .liealg import jacobi_check, make_W
    v = jacobi_check(make_W(8))
    return [_ok("jacobi.w8", not v, f"violations: {len(v)}")]


@check("liealg.prop1")
def _prop1():
    from .liealg import prop1_check
    r = prop1_check()
    ok = not r["phi_failures"] and not r["abstract_failures"] and r["bijective"]
    return [_ok("liealg.prop1", ok, f"phi failures: {len(r['phi_failures'])}",
                f"abstract failures: {len(r['abstract_failures'])}", f"bijective: {r['bijective']}")]


@check("liealg.adjoint")
def _adjoint():
    from .liealg import adjoint_convention_report, adjoint_homomorphism_check, make_alt1
    hom = adjoint_homomorphism_check(make_alt1())
    out = [_ok("liealg.adjoint", not hom, f"ad homomorphism failures: {len(hom)}")]
    conv = adjoint_convention_report()
    for lab, names in conv.items():
        if "ad" not in names:
            out.append(_disc(f"liealg.adjoint/{lab}", f"printed ad({lab})",
                             f"ad({lab}) with (k, j) = coefficient of e_k in [{lab}, e_j]",
                             f"printed matrix equals: {names or 'none of ad, -ad, ad^T, -ad^T'}"))
    return out


@check("liealg.contraction")
def _contraction():
    from .liealg import contraction_check
    r = contraction_check(5)
    ok = not r["bracket_mismatches"] and not r["jacobi"] and not r["limit_mismatches"] and r["x_brackets_a_free"]
    return [_ok("liealg.contraction", ok, f"bracket mismatches: {len(r['bracket_mismatches'])}",
                f"jacobi violations: {len(r['jacobi'])}", f"a->0 mismatches: {len(r['limit_mismatches'])}")]


@check("liealg.density")
def _density():
    from .liealg import density_action_check
    r = density_action_check(6)
    return [_ok("liealg.density", not r["mismatches"], f"mismatches: {len(r['mismatches'])}")]


@check("liealg.two_virasoro")
def _two_vir():
    from .liealg import two_virasoro_check
    r = two_virasoro_check(5)
    got = r["brackets"][(2, -2)]
    return [_ok("liealg.two_virasoro", not r["mismatches"], f"mismatches: {len(r['mismatches'])}",
                f"[L(2), L(-2)] = {got[0]}", f"[L(2), L(-2)^e] = {got[1]}")]


# differential operators --------------------------------------------------------------------

@check("diffop.zeta_alt1")
def _zeta_alt1():
    from .diffop import verify_zeta_alt1
    m = verify_zeta_alt1()
    return [_ok("diffop.zeta_alt1", not m, f"mismatches: {len(m)}")]


@check("diffop.zeta_sch1")
def _zeta_sch1():
    from .diffop import verify_zeta_sch1
    m = verify_zeta_sch1()
    return [_ok("diffop.zeta_sch1", not m, f"mismatches: {len(m)}")]


def _w_check(name):
    def run():
        from .diffop import get_realization, verify_W_realization
        m = verify_W_realization(get_realization(name), 8)
        return [_ok(f"diffop.W.{name}", not m, f"mismatches: {len(m)}")]
    return run


for _name in ("contact_J", "fixed_mass"):
    CHECKS[f"diffop.W.{_name}"] = _w_check(_name)


def _casimir_check(name):
    def run():
        from .diffop import PRINTED_CASIMIR, PRINTED_CASIMIR_TEXT, casimir_image, get_realization
        S, residuals = casimir_image(get_realization(name))
        cid = f"casimir.{name}"
        out = [_ok(cid, not residuals, f"S = {S.pretty()}", f"non-commuting generators: {sorted(residuals)}")]
        if name in PRINTED_CASIMIR:
            if S == PRINTED_CASIMIR[name]:
                out[0].details.append("equals the printed operator")
            else:
                out.append(_disc(f"{cid}/printed", PRINTED_CASIMIR_TEXT[name], S.pretty()))
        else:
            if S.order() != 0:
                out[0].status = "fail"
            out[0].details.append(f"derivative order: {S.order()}")
        return out
    return run


for _name in ("zeta_standard", "contact_J", "fixed_mass"):
    CHECKS[f"casimir.{_name}"] = _casimir_check(_name)


@check("diffop.nogo")
def _nogo():
    from .diffop import nogo_solve
    r = nogo_solve(4, True)
    ok = r.status == "infeasible" and r.witness is not None
    return [_ok("diffop.nogo", ok, f"status: {r.status}", f"d_r f from relation 1: {r.drf_relation1}",
                f"d_r f from relations 2, 3: {r.drf_relation3}", f"unknowns: {r.unknowns}")]


@check("diffop.contact")
def _contact():
    from .diffop import contact_check
    rows = contact_check(5)
    bad = [r["label"] for r in rows if not (r["cond1"] and r["cond2"] and r["cond3"])]
    return [_ok("diffop.contact", not bad, f"generators checked: {len(rows)}", f"failures: {bad}")]


# cohomology -------------------------------------------------------------------------------

@check("cohomology.h2")
def _h2():
    from .cohomology import algebra_by_name, h2
    dims = {n: h2(algebra_by_name(n)).dim_H2 for n in ("alt1", "sl2", "abelian2")}
    ok = dims == {"alt1": 0, "sl2": 0, "abelian2": 1}
    return [_ok("cohomology.h2", ok, *(f"dim H2({n}) = {d}" for n, d in dims.items()))]


@check("cohomology.w_cocycles")
def _wcoc():
    from .cohomology import graded_cocycle_check
    r = graded_cocycle_check(6)
    ok = all(not v["violations"] and v["certificate"].infeasible for v in r.values())
    return [_ok("cohomology.w_cocycles", ok, *(f"{k}: violations {len(v['violations'])}, "
                                              f"non-coboundary {v['certificate'].infeasible}" for k, v in r.items()))]


@check("cohomology.prop2")
def _prop2():
    from .cohomology import prop2_analysis
    r = prop2_analysis()
    ok = all(r["killed"])
    out = [_ok("cohomology.prop2", ok, f"cocycle space: {r['cocycle_space']}", f"all coboundaries: {r['killed']}")]
    for trip, good, got, printed in r["printed"]:
        if not good:
            out.append(_disc(f"cohomology.prop2/{','.join(trip)}", printed, got))
    out.append(_disc("cohomology.prop2/shift", "lambda(L0) = 2a, lambda(L0^e) = 2b",
                     "lambda(L0) = a/2, lambda(L0^e) = b/2"))
    return out


# group law ---------------------------------------------------------------------------------

@check("grouplaw.matrix_rep")
def _mrep():
    from .grouplaw import PRINTED_REP, REPAIRED_REP, matrix_casimir, verify_matrix_rep
    printed_bad = verify_matrix_rep(PRINTED_REP)
    repaired_bad = verify_matrix_rep(REPAIRED_REP)
    S0, S1, S = matrix_casimir()
    commutes = all(S.commutator(m).is_zero() for m in REPAIRED_REP.values())
    only_x = all("X-1" in (a, b) for a, b, _ in printed_bad)
    ok = not repaired_bad and commutes and only_x and S1.is_zero()
    return [_ok("grouplaw.matrix_rep", ok, f"repaired failures: {len(repaired_bad)}", f"S0 = {S0}",
                f"Casimir commutes: {commutes}"),
            _disc("grouplaw.matrix_rep/X-1", PRINTED_REP["X-1"], REPAIRED_REP["X-1"],
                  f"printed set fails {[(a, b) for a, b, _ in printed_bad]}")]


@check("grouplaw.product")
def _product():
    from .grouplaw import PRINTED_G, group_element, group_product_check
    bad = group_product_check()
    g_ok = group_element() == PRINTED_G
    return [_ok("grouplaw.product", not bad and g_ok, f"product mismatches: {bad}", f"g(A) equals print: {g_ok}")]


@check("grouplaw.extraction")
def _extraction():
    from .grouplaw import extraction_check
    bad = extraction_check(1)
    printed_bad = extraction_check(-1)
    out = [_ok("grouplaw.extraction", not bad, f"slots failing: {bad}")]
    if printed_bad:
        out.append(_disc("grouplaw.extraction/A5", "A5 = -g23/g22 - g24*g21/g22^2",
                         "A5 = -g23/g22 + g24*g21/g22^2", "printed formula returns A5 + A3*A6"))
    return out


@check("grouplaw.prop7")
def _prop7():
    from .grouplaw import PROP7_TEXT, leibniz_group_law
    r = leibniz_group_law()
    ok = not r.product_mismatches and r.corrected_holds
    out = [_ok("grouplaw.prop7", ok, f"corrected formulas rebuild product: {r.corrected_holds}",
               f"A1, A4-only repair rebuilds product: {r.two_slot_repair_holds}")]
    for slot, printed, derived in r.discrepancies:
        text = PROP7_TEXT.get(slot, (str(printed), str(derived)))
        out.append(_disc(f"grouplaw.prop7/{'A4' if slot == 'eA4' else f'A{slot}'}", text[0], text[1]))
    return out


@check("grouplaw.pi")
def _pi():
    from .grouplaw import (PRINTED_ETA_DDAG, PRINTED_PI_DDAG, PRINTED_PI_STAR, check_pi_identity, compare_pi,
                           pi_at_zero, pi_matrices)
    pi = pi_matrices()
    ident = check_pi_identity(pi)
    ok = not ident["ddag"] and not ident["star"] and pi_at_zero(pi)
    out = [_ok("grouplaw.pi", ok, f"identity failures: {ident}", f"pi(0) = I: {pi_at_zero(pi)}")]
    for name, comp, printed in (("pi_star", pi.pi_star, PRINTED_PI_STAR), ("pi_ddag", pi.pi_ddag, PRINTED_PI_DDAG),
                                ("eta_ddag", pi.pi_ddag, PRINTED_ETA_DDAG)):
        for i, j, c, p in compare_pi(comp, printed):
            out.append(_disc(f"grouplaw.pi/{name}[{i},{j}]", p, c))
    return out


FLOW_ALPHAS = [
    ("1/3", "-1/2", "1/4", "1/5", "-1/3", "1/2"),
    ("1/2", "1/2", "-1/2", "-1/2", "1/2", "1/2"),
    ("-1/7", "1/3", "0", "1/2", "1/4", "-1/5"),
]


@check("grouplaw.flow")
def _flow():
    from .grouplaw import pi_matrices, splitting_flow_test
    pi = pi_matrices()
    devs = []
    for alpha in FLOW_ALPHAS:
        for which in ("star", "ddag"):
            devs.append(splitting_flow_test(alpha, 1000, which, pi))
    worst = max(devs)
    return [_ok("grouplaw.flow", worst < 1e-9, f"max deviation: {worst:.3e}")]


# Fock space ------------------------------------------------------------------------------

@check("fock.actions")
def _actions():
    from .fock import acti_check
    r = acti_check()
    out = [_ok("fock.actions", not r.bracket_failures, f"bracket failures: {len(r.bracket_failures)}",
               f"printed rules break: {r.printed_bracket_failures}")]
    for g, printed, derived in r.discrepancies:
        out.append(_disc(f"fock.actions/{g}", printed, derived))
    return out


@check("fock.bosonic")
def _bosonic():
    from .fock import bosonic_realization_check
    r = bosonic_realization_check()
    ok = r.derived_equals_imres and not r.bracket_failures and not r.fock_mismatches
    out = [_ok("fock.bosonic", ok, f"words equal the PDE transposes: {r.derived_equals_imres}",
               f"Fock mismatches: {len(r.fock_mismatches)}", f"printed words break: {r.printed_bracket_failures}")]
    for g, printed, derived in r.discrepancies:
        out.append(_disc(f"fock.bosonic/{g}", printed, derived))
    return out


@check("fock.detlf")
def _detlf():
    from .fock import detlf_check
    r = detlf_check()
    out = [_ok("fock.detlf", True, *(f"d/d{b}: {op}" for b, op in r.derived.items()))]
    for b, printed, derived in r.discrepancies:
        out.append(_disc(f"fock.detlf/{b}", printed, derived))
    return out


@check("fock.gram")
def _gram():
    from .fock import gram_vs_leibniz
    bad = gram_vs_leibniz(4)
    return [_ok("fock.gram", not bad, f"mismatches: {bad}")]


@check("fock.adjoint")
def _adj():
    from .fock import adjointness_check
    bad = adjointness_check(6)
    return [_ok("fock.adjoint", not bad, f"failures: {len(bad)}")]


@check("fock.coherent")
def _coh():
    from .fock import coherent_inner_check
    return [_ok("fock.coherent", coherent_inner_check(4))]


@check("fock.tilted")
def _tilted():
    from .fock import tilted_plane_check
    r = tilted_plane_check()
    return [_ok("fock.tilted", r.matches_printed and not r.commutator, f"Ybar = {r.ybar}", f"Xbar = {r.xbar}")]


@check("fock.prop8")
def _prop8():
    from .fock import prop8_generating_function
    r = prop8_generating_function(4)
    out = [_ok("fock.prop8", not r.corrected_mismatches, f"corrected mismatches: {r.corrected_mismatches}",
               f"printed mismatches: {r.printed_mismatches}")]
    for what, printed, derived in r.discrepancies:
        out.append(_disc("fock.prop8/third_factor", printed, derived))
    return out


# Appell -------------------------------------------------------------------------------------

@check("appell.wick")
def _wick():
    from .appell import MomentSequence, appell_from_wick, appell_polynomials, wick_product
    ok = True
    for k in range(1, 7):
        w = wick_product(k)
        ok &= w.consistent and w.expectation().is_zero()
    ps = appell_polynomials(6)
    ok &= all(appell_from_wick(n) == ps[n] for n in range(7))
    return [_ok("appell.wick", ok, f"<X1,X2> = {wick_product(2).as_poly()}")]


@check("appell.conditions")
def _cond():
    from .appell import MomentSequence, appell_conditions, appell_polynomials
    bad = appell_conditions(appell_polynomials(8), MomentSequence())
    return [_ok("appell.conditions", not bad, f"failures: {bad}")]


@check("appell.example2")
def _ex2():
    from .appell import example2_check
    r = example2_check()
    out = [_ok("appell.example2", {0, 1, 2, 3} <= set(r.matches), f"rows matching: {r.matches}")]
    for n, printed, derived in r.discrepancies:
        out.append(_disc(f"appell.example2/P{n}", printed, derived))
    return out


@check("appell.hermite")
def _herm():
    from .appell import hermite_check
    r = hermite_check(8)
    return [_ok("appell.hermite", not r.mismatches, f"P4 = {r.polynomials[4]}")]


@check("appell.shifted")
def _shift():
    from .appell import shifted_moment_system
    ps = shifted_moment_system(8)
    ok = all(ps[n].diff("x") == ps[n - 1] * n for n in range(1, 9))
    return [_ok("appell.shifted", ok, f"P2 = {ps[2]}")]


# correlators -------------------------------------------------------------------------------

@check("correlators.phi_st")
def _phist():
    from .correlators import scan_phi_st
    r = scan_phi_st().by_generator()
    ok = all(r[g].classification == "zero" for g in ("Y-1/2", "Y1/2", "M0")) and r["D"].classification == "ode"
    return [_ok("correlators.phi_st", ok, *(f"{g}: {e.classification} {e.constraint or ''}".rstrip()
                                            for g, e in r.items()))]


@check("correlators.phi_j")
def _phij():
    from .correlators import scan_phi_j, zeta_phase_on_phi_j
    r = scan_phi_j().by_generator()
    m0 = zeta_phase_on_phi_j()
    return [_ok("correlators.phi_j", all(e.classification == "zero" for e in r.values()),
                *(f"{g}: {e.classification}" for g, e in r.items()), f"standard M0 pair: {m0.format()}")]


@check("correlators.fixed")
def _fixed():
    from .correlators import fixed_mass_correlator_check
    r = fixed_mass_correlator_check()
    item1 = r.reports["item1"].by_generator()
    ok = item1["Y1/2"].classification == "zero" and item1["Y-1/2"].classification == "zero"
    details = []
    for item, rep in r.reports.items():
        for e in rep.entries:
            details.append(f"{item} {e.generator}: {e.classification} {e.format()}")
    return [_ok("correlators.fixed", ok, *details)]


@check("correlators.spot")
def _spot():
    from .correlators import M1, covariance_scan, fixed1, phi_st, spot_check, transported_standard
    from .diffop import zeta_physical
    gens = {k: v for k, v in zeta_physical().items() if k in ("Y-1/2", "Y1/2", "M0", "D")}
    bad = spot_check(covariance_scan(gens, phi_st()), gens, phi_st(), points=20)
    ts = transported_standard()
    g2 = {k: ts[k] for k in ("Y1/2", "Y-1/2")}
    p1, p2 = {"M": M1}, {"M": -M1}
    bad += spot_check(covariance_scan(g2, fixed1(), p1, p2), g2, fixed1(), p1, p2, points=20)
    return [_ok("correlators.spot", not bad, f"disagreements: {len(bad)}")]


# runner ------------------------------------------------------------------------------------

class UnknownCheck(KeyError):
    pass


def select(pattern: str | None) -> list:
    ids = sorted(CHECKS)
    if not pattern:
        return ids
    chosen = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
    if not chosen:
        raise UnknownCheck(pattern)
    return chosen


def _run_one(cid: str, timing: bool) -> list:
    t0 = time.perf_counter()
    try:
        results = CHECKS[cid]()
    except Exception as exc:  # a crashing check is a failing check
        results = [CheckResult(cid, "fail", [f"{type(exc).__name__}: {exc}"])]
    if timing:
        results[0].ms = round((time.perf_counter() - t0) * 1000, 1)
    return results


def run_suite(pattern: str | None = None, parallel: bool = False, timing: bool = False) -> list:
    ids = select(pattern)
    if parallel:
        with ThreadPoolExecutor() as ex:
            chunks = list(ex.map(lambda c: _run_one(c, timing), ids))
    else:
        chunks = [_run_one(c, timing) for c in ids]
    return [r for chunk in chunks for r in chunk]


def exit_code(results) -> int:
    return 1 if any(r.status == "fail" for r in results) else 0


__all__ = ["CheckResult", "CHECKS", "run_suite", "select", "exit_code", "UnknownCheck", "FLOW_ALPHAS"]
