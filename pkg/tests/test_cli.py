from __future__ import annotations

import json
import subprocess
import sys

import pytest

from quintcover.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv) + ["--quiet"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_cover_verb(capsys):
    code, out = run(capsys, "cover", "--a", "3", "--b", "2")
    assert code == EXIT_PASS
    assert out["status"] == "pass" and out["payload"]["case"] == "II"


def test_curve_and_invariants(capsys):
    code, out = run(capsys, "invariants", "--case", "I", "--a", "6")
    assert code == EXIT_PASS
    assert set(out["payload"]["absolute"]) == {"i1", "i2", "i3"}
    code, out = run(capsys, "curve", "--a", "1", "--b", "2")
    assert code == EXIT_PASS
    assert out["payload"]["curve"]["field"] == {"quad_ext_d": "-87"}


def test_invariants_with_automorphisms(capsys):
    code, out = run(capsys, "invariants", "--coeffs", "-1,0,0,0,0,0,1", "--aut")
    assert code == EXIT_PASS
    assert out["payload"]["aut"]["order"] == 12


def test_locus_and_recover_round_trip(capsys):
    code, out = run(capsys, "locus", "--case", "I", "--T", "3/7")
    assert code == EXIT_PASS
    p = out["payload"]
    code, back = run(capsys, "recover", "--case", "I", "--i1", p["i1"], "--i2", p["i2"], "--i3", p["i3"])
    assert code == EXIT_PASS and back["payload"]["T"] == "3/7"


def test_case3_locus_and_recover(capsys):
    code, out = run(capsys, "locus", "--case", "III", "--a", "5/3")
    assert code == EXIT_PASS
    u = out["payload"]["u"]
    code, inv = run(capsys, "invariants", "--case", "III", "--a", "5/3", "--model", "oracle")
    abs_ = inv["payload"]["absolute"]
    code, back = run(capsys, "recover", "--case", "III", "--i1", abs_["i1"], "--i2", abs_["i2"], "--i3", abs_["i3"])
    assert code == EXIT_PASS and back["payload"]["u"] == u


def test_nielsen_output(capsys):
    code, out = run(capsys, "nielsen", "--group", "S5", "--types", "2^2,2^2,4,2")
    assert code == EXIT_PASS
    assert out["payload"]["classes"] == 8 and out["payload"]["tuples"] == 960


def test_verify_suite_reports_pass(capsys):
    code, out = run(capsys, "verify", "--suite", "eq4")
    assert code == EXIT_PASS and out["payload"]["checks"][0]["status"] == "pass"


def test_verify_suite_reports_fail(capsys):
    code, out = run(capsys, "verify", "--suite", "caseI")
    assert code == EXIT_FAIL
    statuses = {c["check"]: c["status"] for c in out["payload"]["checks"]}
    assert statuses == {"caseI-pipeline": "pass", "caseI-lambda": "fail"}


def test_domain_errors_exit_with_one(capsys):
    code, out = run(capsys, "cover", "--a", "0", "--b", "1")
    assert code == EXIT_FAIL
    assert out["status"] == "error" and out["payload"]["error"]


@pytest.mark.parametrize(
    "argv",
    [
        ["cover", "--a", "3"],
        ["cover", "--a", "x", "--b", "1"],
        ["frobnicate"],
        ["nielsen", "--group", "S5"],
    ],
)
def test_usage_errors_exit_with_two(capsys, argv):
    assert main(argv + ["--quiet"]) == EXIT_USAGE


def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "quintcover", "locus", "--case", "II", "--T", "5/3", "--quiet"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")


def test_no_json_flag_suppresses_stdout(capsys):
    assert main(["nielsen", "--group", "S5", "--types", "2^2,2^2,4,2", "--no-json"]) == EXIT_PASS
    captured = capsys.readouterr()
    assert captured.out == "" and "nielsen: pass" in captured.err


def test_negative_rational_values_are_accepted(capsys):
    code, out = run(capsys, "cover", "--a", "-3/2", "--b", "2")
    assert code == EXIT_PASS and out["payload"]["a"] == "-3/2"
