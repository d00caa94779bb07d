import json
import logging
from pathlib import Path

import pytest
from typer.testing import CliRunner

from cli import app

DATA = Path(__file__).resolve().parents[1] / "data" / "algebras"

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_logs(monkeypatch, tmp_path):
    monkeypatch.setenv("POINCARE_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("POINCARE_LOG_LEVEL", "WARNING")
    yield
    root = logging.getLogger()
    for h in list(root.handlers):
        if getattr(h, "_poincare", False):
            root.removeHandler(h)
            h.close()


def invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


# ----------------------------------------
# build
def test_build_summary():
    result = invoke("build", 3, 4, 2, 0, "--format", "json")
    assert result.exit_code == 0, result.stderr
    data = json.loads(result.stdout)
    assert data["summary"]["dimension"] == 8
    assert data["summary"]["hilbert_function"] == "{1,3,2,1,1}"
    assert data["summary"]["class"] == "almost_stretched"
    assert data["summary"]["shape_matches"] is True
    assert data["algebra"]["basis"][0] == "1"
    assert data["watermark"] is None


def test_build_rejects_bad_parameters():
    result = invoke("build", 3, 2, 2, 0)
    assert result.exit_code == 2
    assert result.stderr.startswith("error:")


def test_build_writes_output_file(tmp_path):
    target = tmp_path / "out" / "a.json"
    result = invoke("build", 2, 3, 2, "1/2", "--format", "json", "--output", target)
    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(target.read_text(encoding="utf-8"))["summary"]["dimension"] == 6


# ----------------------------------------
# betti
def test_betti_json():
    result = invoke("betti", "A", 3, 3, 2, 0, "--depth", 4, "--format", "json", "--no-timing")
    assert result.exit_code == 0, result.stderr
    data = json.loads(result.stdout)
    assert data["betti"] == [1, 3, 8, 21, 55]
    assert data["series"] == "1 / (1 - 3z + z^2)"
    assert data["match"] is True
    assert data["truncated"] is False
    assert data["runtime_ms"] == 0
    assert data["params"] == {"h": 3, "s": 3, "t": 2, "a": "0", "depth": 4}


def test_betti_is_deterministic():
    args = ("betti", "R/K", 3, 3, 2, 0, "--depth", 3, "--format", "json", "--no-timing")
    assert invoke(*args).stdout == invoke(*args).stdout


def test_betti_csv_for_s_mod_l():
    result = invoke("betti", "SL", 3, 2, 0, "--depth", 4, "--format", "csv")
    assert result.exit_code == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "i,b_i,series,match"
    assert lines[1] == "0,1,1,yes"
    assert lines[-1] == "4,16,16,yes"


def test_betti_text():
    result = invoke("betti", "SV", 3, 2, "--depth", 3)
    assert result.exit_code == 0
    assert "series: 1 / (1 - 2z + z^2)" in result.stdout
    assert "match: yes" in result.stdout


def test_betti_from_file_with_maps():
    result = invoke("betti", "FILE", "--algebra-file", DATA / "kx_mod_x3.json", "--depth", 4, "--format", "json", "--maps")
    assert result.exit_code == 0, result.stderr
    data = json.loads(result.stdout)
    assert data["betti"] == [1, 1, 1, 1, 1]
    assert data["series"] is None and data["match"] is None
    assert data["resolution"]["maps"][0]["entries"] == [[["0/1", "1/1", "0/1"]]]


def test_betti_errors():
    assert invoke("betti", "FILE").exit_code == 2
    assert invoke("betti", "XYZ", 3, 3, 2).exit_code == 2
    assert invoke("betti", "A", 3, 3).exit_code == 2
    assert invoke("betti", "A", 3, 3, 2, "--field", "prime:4").exit_code == 2


def test_betti_truncation_is_reported():
    result = invoke("betti", "A", 3, 3, 2, 0, "--depth", 5, "--dim-cap", 30)
    assert result.exit_code == 0
    assert "truncated: dim_cap 30 reached after b_2" in result.stdout


# ----------------------------------------
# verify
def test_verify_passes():
    result = invoke("verify", 3, 3, 2, 0, "--depth", 3)
    assert result.exit_code == 0, result.stderr
    assert result.stdout.strip().endswith("PASS (7 checks)")


def test_verify_json_report():
    result = invoke("verify", 2, 3, 2, 0, "--d", 1, "--depth", 3, "--format", "json", "--no-timing")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["command"] == "verify"
    assert report["runtime_ms"] == 0
    assert all(c["pass"] for c in report["checks"])


def test_verify_mismatch_exits_one():
    result = invoke("verify", 3, 3, 2, 0, "--depth", 3, "--expected-series", "1/(1-2z)")
    assert result.exit_code == 1
    assert result.stderr.startswith("FAIL betti_A: expected [1, 2, 4, 8]")


def test_verify_prime_field_watermark():
    result = invoke("verify", 3, 3, 2, 0, "--depth", 3, "--field", "prime:101")
    assert result.exit_code == 0
    assert "[characteristic-p heuristic]" in result.stdout


# ----------------------------------------
# classify / poincare
def test_classify_text():
    result = invoke("classify", 7, 3)
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "{1,3,2,1}; {1,3,1,1,1}"
    assert lines[-1] == "rational: yes (multiplicity-seven bound (e <= 7))"


def test_classify_json_lists_exclusion():
    data = json.loads(invoke("classify", 7, 2, "--format", "json").stdout)
    assert data["possible"] == ["{1,2,2,1,1}", "{1,2,1,1,1,1}"]
    assert data["excluded"] == ["{1,2,3,1}"]
    assert data["rational"] is True


def test_classify_out_of_range():
    result = invoke("classify", 3, 3)
    assert result.exit_code == 2
    assert "e >= h+1" in result.stderr


def test_poincare_text():
    result = invoke("poincare", 1, 2, "--expand", 3)
    assert result.exit_code == 0
    assert result.stdout == "(1 + z) / (1 - 2z + z^2)\n[1, 3, 5, 7]\n"


def test_poincare_json_trace():
    data = json.loads(invoke("poincare", 0, 4, "--expand", 2, "--trace", "--format", "json").stdout)
    assert data["num"] == [1] and data["den"] == [1, -4, 1]
    assert data["coefficients"] == [1, 4, 15]
    assert data["trace"][-1]["series"] == "1 / (1 - 4z + z^2)"


def test_poincare_rejects_small_h():
    assert invoke("poincare", 0, 1).exit_code == 2
