"""End-to-end CLI runs through a subprocess, matching exact bytes."""

import json
import subprocess
import sys

import pytest


def run_cli(*argv, env=None):
    cmd = [sys.executable, "-m", "spinhecke.cli", *argv]
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def test_element_kappa_golden():
    res = run_cli("element", "--kind", "kappa", "--tableau", "1,2")
    assert res.returncode == 0
    assert res.stdout == "2 * perm(1 2)\n"


def test_element_tau():
    res = run_cli("element", "--kind", "tau", "--k", "2", "--i", "1", "--j", "2")
    assert res.returncode == 0
    assert res.stdout == (
        "1/2*sqrt2 * p[1] * perm(2 1) + -1/2*sqrt2 * p[2] * perm(2 1)\n")


def test_element_jm_listing():
    res = run_cli("element", "--kind", "jm", "--k", "2")
    assert res.stdout == "x_1 = 0\nx_2 = 1 * perm(2 1)\n"
    res = run_cli("element", "--kind", "jm", "--k", "2", "--family", "odd")
    assert res.stdout.splitlines()[0] == "pi_1 = 0"
    res = run_cli("element", "--kind", "jm", "--k", "3", "--i", "2")
    assert res.returncode == 0
    assert " = " not in res.stdout


def test_element_json_format():
    res = run_cli("element", "--kind", "rho", "--tableau", "1,2", "--format", "json")
    doc = json.loads(res.stdout)
    assert doc == {"kind": "rho", "elements": ["1 * perm(1 2) + 1 * perm(2 1)"]}


def test_element_lambda_columnwise():
    # --lambda uses the columnwise standard filling of the shape
    res = run_cli("element", "--kind", "sigma_t", "--lambda", "2")
    assert res.stdout == "1 * perm(1 2)\n"


def test_relations_text():
    res = run_cli("relations", "--k", "2", "--format", "text")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "PASS    spin_relations  k=2"
    assert lines[-1] == "3 passed, 0 failed, 0 skipped"


def test_relations_json_structure():
    res = run_cli("relations", "--k", "3")
    doc = json.loads(res.stdout)
    assert doc["all_pass"] is True
    assert doc["k"] == 3
    assert [c["check_id"] for c in doc["checks"]] == [
        "spin_relations", "jm_commutation", "nazarov_identity"]
    assert all(c["elapsed_ms"] is None for c in doc["checks"])


def test_verify_repeat_runs_are_byte_identical():
    first = run_cli("verify", "--k", "3")
    second = run_cli("verify", "--k", "3")
    assert first.returncode == 0
    assert first.stdout == second.stdout


def test_verify_workers_do_not_change_output():
    import os

    base = run_cli("verify", "--k", "3")
    env = dict(os.environ, SPINHECKE_WORKERS="3")
    par = run_cli("verify", "--k", "3", env=env)
    assert par.returncode == 0
    assert par.stdout == base.stdout


def test_verify_lambda_mode():
    res = run_cli("verify", "--lambda", "2,1", "--format", "text")
    assert res.returncode == 0
    assert "specht_centralizer" in res.stdout
    assert "0 failed" in res.stdout


def test_verify_timings_marks_elapsed():
    res = run_cli("verify", "--k", "2", "--timings")
    doc = json.loads(res.stdout)
    assert all(isinstance(c["elapsed_ms"], int) for c in doc["checks"])


def test_decompose_csv_header():
    res = run_cli("decompose", "--n", "1", "--k", "2", "--format", "csv")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "lambda,dim_M,dim_R,g,delta,dim_qspan"
    assert lines[1] == "2,4,4,1,1,4"


def test_decompose_text_total():
    res = run_cli("decompose", "--n", "2", "--k", "3", "--format", "text")
    assert res.returncode == 0
    assert "pass: total = 64 = (2n)^k" in res.stdout


def test_out_writes_file_and_silences_stdout(tmp_path):
    target = tmp_path / "report.json"
    res = run_cli("verify", "--k", "2", "--out", str(target))
    assert res.returncode == 0
    assert res.stdout == ""
    assert json.loads(target.read_text())["all_pass"] is True


@pytest.mark.parametrize("argv", [
    ("relations", "--k", "7"),
    ("relations", "--k", "0"),
    ("verify",),
    ("verify", "--k", "3", "--lambda", "2,1"),
    ("verify", "--lambda", "2,2"),
    ("element", "--kind", "tau", "--k", "3", "--i", "1"),
    ("element", "--kind", "kappa"),
    ("element", "--kind", "jm", "--k", "3", "--i", "5"),
    ("decompose", "--n", "3", "--k", "2"),
    ("nosuchcommand",),
])
def test_bad_arguments_exit_2(argv):
    res = run_cli(*argv)
    assert res.returncode == 2
    assert res.stderr


def test_guardrail_override():
    # the same k that errors above runs once --allow-large is passed
    res = run_cli("element", "--kind", "jm", "--k", "7", "--i", "1",
                  "--allow-large")
    assert res.returncode == 0
    assert res.stdout == "0\n"


def test_console_entry_point_matches_module():
    import shutil

    exe = shutil.which("spinhecke")
    if exe is None:
        pytest.skip("console script not on PATH")
    via_script = subprocess.run(
        [exe, "element", "--kind", "kappa", "--tableau", "1,2"],
        capture_output=True, text=True)
    assert via_script.stdout == "2 * perm(1 2)\n"
