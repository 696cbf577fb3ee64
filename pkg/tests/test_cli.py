"""CLI behaviour: exit codes, deterministic JSON, cache, figures, negative path."""

import io
import json
from contextlib import redirect_stdout

import pytest

from exlie.cache import load_basis, operator_from_strings, operator_to_strings, save_basis
from exlie.cli import main
from exlie.f4e6 import f4_basis
from exlie.octonions import TABLE
from exlie.report import Report, Check, convention_fingerprint, emit_json, emit_report
from exlie.suites import SuiteConfig, run_suite


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_g2_json_deterministic():
    code1, out1 = run_cli(["verify", "g2", "--format", "json"])
    code2, out2 = run_cli(["verify", "g2", "--format", "json"])
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical
    doc = json.loads(out1)
    assert doc["suite"] == "g2"
    assert doc["totals"]["fail"] == 0
    ids = [c["id"] for c in doc["checks"]]
    assert "g2_fixed_dim" in ids
    fixed = next(c for c in doc["checks"] if c["id"] == "g2_fixed_dim")
    assert fixed["expected"] == "2" and fixed["status"] == "pass"


def test_octonion_suite_passes_and_reports_table():
    code, out = run_cli(["verify", "octonion"])
    assert code == 0
    assert "oct_table_dump" in out


def test_corrupted_table_fails_with_nonzero_exit():
    config = SuiteConfig(suite="octonion", table_override=TABLE.corrupted())
    report = run_suite(config)
    assert not report.ok
    assert report.exit_code() == 1
    failing = {c.id for c in report.checks if c.status == "fail"}
    assert "oct_alternativity" in failing


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["verify", "e9"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_empty_report_totals():
    rep = Report(suite="octonion", checks=[])
    assert rep.totals() == {"pass": 0, "fail": 0, "skip": 0}
    assert rep.exit_code() == 0


def test_failing_check_prints_offender_and_sets_exit():
    rep = Report(
        suite="octonion",
        checks=[Check("c1", "basis element F2(e3) image mismatch", "§2",
                      "fail", "0", "nonzero at F2(e3)", 1)],
    )
    assert rep.exit_code() == 1
    text = emit_report(rep, "text")
    assert "F2(e3)" in text
    assert "FAIL" in text


def test_json_millis_normalized():
    rep = Report(
        suite="g2",
        checks=[Check("c1", "d", "§1", "pass", "1", "1", 1234)],
        fingerprint=convention_fingerprint(),
    )
    doc = json.loads(emit_json(rep))
    assert doc["checks"][0]["millis"] == 0


def test_cache_round_trip(tmp_path):
    ops = f4_basis()
    fp = convention_fingerprint()
    save_basis(tmp_path, "f4_basis", ops, fp)
    loaded, why = load_basis(tmp_path, "f4_basis", fp, 27, "jordan27")
    assert why == "ok"
    assert len(loaded) == len(ops)
    assert all(a == b for a, b in zip(loaded, ops))


def test_cache_rejects_wrong_fingerprint(tmp_path):
    ops = f4_basis()[:3]
    save_basis(tmp_path, "f4_basis", ops, "deadbeef")
    loaded, why = load_basis(tmp_path, "f4_basis", convention_fingerprint(), 27, "jordan27")
    assert loaded is None and why == "fingerprint mismatch"


def test_cache_corruption_recovers(tmp_path, capsys):
    (tmp_path / "f4_basis.json").write_text("{ not json")
    loaded, why = load_basis(tmp_path, "f4_basis", convention_fingerprint(), 27, "jordan27")
    assert loaded is None and why.startswith("corrupt")
    # the suite recomputes and still passes
    config = SuiteConfig(suite="g2", cache_dir=str(tmp_path))
    report = run_suite(config)
    assert report.ok


def test_cache_used_by_suite(tmp_path):
    config = SuiteConfig(suite="f4", cache_dir=str(tmp_path))
    report = run_suite(config)
    assert report.ok
    assert (tmp_path / "f4_basis.json").exists()
    loaded, why = load_basis(tmp_path, "f4_basis", convention_fingerprint(), 27, "jordan27")
    assert why == "ok" and len(loaded) == 52


def test_operator_string_round_trip():
    op = f4_basis()[0]
    strs = operator_to_strings(op)
    assert operator_from_strings(strs, 27, "jordan27") == op


def test_figures(tmp_path):
    from exlie.figures import render_figures

    report = run_suite(SuiteConfig(suite="g2"))
    written = render_figures(report, tmp_path)
    for p in written:
        assert p.exists() and p.stat().st_size > 0
    assert (tmp_path / "octonion_table.png").exists()
    assert (tmp_path / "summary_g2.png").exists()


def test_cli_figures_flag(tmp_path):
    code, _ = run_cli(["verify", "g2", "--figures", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "summary_g2.png").exists()


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(suite="g3").validate()
    with pytest.raises(ValueError):
        SuiteConfig(format="yaml").validate()
    with pytest.raises(ValueError):
        SuiteConfig(parallelism=0).validate()
