import json
import subprocess
import sys
from pathlib import Path

import pytest

from alt1.checks import CHECKS, exit_code, run_suite, select
from alt1.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_jacobi(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "jacobi.*")
    assert code == 0
    assert out.splitlines()[-1] == "3 passed, 0 failed, 0 discrepancies"


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--filter", "nosuchcheck")
    assert code == 2
    assert "nosuchcheck" in err


def test_verify_prop7_reports_discrepancies(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--filter", "grouplaw.prop7", "--json", str(path))
    assert code == 0
    checks = json.loads(path.read_text())["checks"]
    assert checks[0]["id"] == "grouplaw.prop7" and checks[0]["status"] == "pass"
    disc = [c for c in checks if c["status"] == "paper_discrepancy"]
    assert [c["id"] for c in disc] == ["grouplaw.prop7/A1", "grouplaw.prop7/A4", "grouplaw.prop7/A5"]
    for c in checks:
        assert set(c) == {"id", "status", "details", "printed", "derived", "ms"}
        assert c["ms"] is None
        if c["status"] == "paper_discrepancy":
            assert c["printed"] and c["derived"]


def test_report_deterministic_serial_vs_parallel(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    pattern = "[cf]*"  # correlators.*, fock.*, cohomology.*, casimir.*
    assert main(["verify", "--filter", pattern, "--json", str(a)]) == 0
    assert main(["verify", "--filter", pattern, "--json", str(b), "--parallel"]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_timing_flag_fills_ms():
    res = run_suite("jacobi.alt1", timing=True)
    assert res[0].ms is not None


def test_failing_check_gives_exit_1(monkeypatch, capsys):
    from alt1 import checks
    monkeypatch.setitem(checks.CHECKS, "zz.broken", lambda: [checks.CheckResult("zz.broken", "fail", ["boom"])])
    code, out, _ = run(capsys, "verify", "--filter", "zz.*")
    assert code == 1
    assert "FAIL  zz.broken" in out


def test_crashing_check_is_a_failure(monkeypatch):
    from alt1 import checks

    def crash():
        raise RuntimeError("bad")
    monkeypatch.setitem(checks.CHECKS, "zz.crash", crash)
    res = run_suite("zz.crash")
    assert res[0].status == "fail" and "RuntimeError" in res[0].details[0]
    assert exit_code(res) == 1


def test_select_is_sorted():
    ids = select(None)
    assert ids == sorted(CHECKS)


def test_casimir_command(capsys):
    code, out, _ = run(capsys, "casimir", "--rep", "zeta_standard")
    assert code == 0
    assert out.strip() == "−2𝕚t²∂t∂ζ − t²∂r² − 𝕚t(2x − 1)∂ζ"


def test_appell_command(capsys):
    code, out, _ = run(capsys, "appell", "--moments", str(DATA / "gaussian.json"), "--n", "4")
    assert code == 0 and out.strip() == "x⁴ − 6x² + 3"


def test_appell_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "appell", "--moments", str(bad), "--n", "2")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("alg,dim", [("alt1", 0), ("sl2", 0), ("abelian2", 1)])
def test_cohomology_command(capsys, alg, dim):
    code, out, _ = run(capsys, "cohomology", "--algebra", alg)
    assert code == 0 and out.strip() == f"dim H² = {dim}"


def test_fock_gram_command(capsys):
    code, out, _ = run(capsys, "fock-gram", "--order", "1")
    assert code == 0
    assert out.splitlines() == ["<00|00> = 1", "<01|01> = 2x", "<01|10> = 2γ", "<10|01> = 2γ"]


def test_grouplaw_command(capsys):
    code, out, _ = run(capsys, "grouplaw", "--check", "prop7")
    assert code == 0 and "derived: (B1 + B2^2*V1)/(1 - B2*V2)^2" in out


def test_correlator_command(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "correlator", "--form", "phi_j", "--rep", "contact_J", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert all(r["classification"] == "zero" for r in data["residuals"])


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["casimir", "--rep", "nope"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "alt1", "cohomology", "--algebra", "sl2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "dim H² = 0"


def test_full_suite_passes_fast_and_discrepancies_carry_both_values():
    import time
    t0 = time.perf_counter()
    res = run_suite()
    assert time.perf_counter() - t0 < 30
    assert [r.id for r in res if r.status == "fail"] == []
    for r in res:
        if r.status == "paper_discrepancy":
            assert r.printed and r.derived and r.printed != r.derived, r.id
