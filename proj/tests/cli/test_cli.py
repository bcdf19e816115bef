"""End-to-end tests of the ncgb command-line tool."""

import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
BIN = os.environ.get("NCGB_BIN", str(ROOT / "build" / "ncgb"))
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"
SCHEMAS = ROOT / "schemas"


def run(*args, env_extra=None):
    env = {k: v for k, v in os.environ.items() if k != "NCGB_MAX_DEGREE"}
    env.update(env_extra or {})
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=env, timeout=600)


def run_json(*args, **kw):
    proc = run(*args, "--format", "json", **kw)
    doc = json.loads(proc.stdout)
    schema = json.loads((SCHEMAS / f"{doc['command']}.schema.json").read_text())
    jsonschema.validate(doc, schema)
    assert doc["exit_code"] == proc.returncode
    return proc, doc


@pytest.mark.parametrize(
    "args, golden",
    [
        (["gb", "--matrix-n", 2], "gb_n2.txt"),
        (["gb", "--matrix-n", 2, "--format", "json"], "gb_n2.json"),
        (["gb", "--matrix-n", 3], "gb_n3.txt"),
        (["gb", "--matrix-n", 3, "--format", "json"], "gb_n3.json"),
        (["table", "--matrix-n", 2], "table_n2.txt"),
        (["table", "--matrix-n", 2, "--format", "json"], "table_n2.json"),
        (["basis", "--matrix-n", 3], "basis_n3.txt"),
        (["center", "--matrix-n", 2], "center_n2.txt"),
        (["decompose", "--matrix-n", 2], "decompose_n2.txt"),
        (["reps", "--matrix-n", 2], "reps_n2.txt"),
        (["dim", "--input", FIXTURES / "downup.json", "--max-degree", 12], "dim_downup.txt"),
    ],
)
def test_golden(args, golden):
    proc = run(*args)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == (GOLDEN / golden).read_text()


def test_output_flag_writes_same_bytes(tmp_path):
    out = tmp_path / "gb.txt"
    proc = run("gb", "--matrix-n", 2, "--output", out)
    assert proc.returncode == 0
    assert proc.stdout == ""
    assert out.read_text() == (GOLDEN / "gb_n2.txt").read_text()


def test_deterministic_and_job_independent():
    first = run("table", "--matrix-n", 2, "--jobs", 1).stdout
    second = run("table", "--matrix-n", 2, "--jobs", 4).stdout
    assert first == second


def test_progress_goes_to_stderr_only():
    proc = run("gb", "--matrix-n", 2)
    assert "pending" in proc.stderr
    assert "pending" not in proc.stdout


def test_relation_modes_agree():
    for n in (2, 3):
        full = run("gb", "--matrix-n", n, "--mode", "full")
        indexed = run("gb", "--matrix-n", n, "--mode", "paper")
        assert full.returncode == indexed.returncode == 0
        assert full.stdout == indexed.stdout


def test_check_examples():
    proc, doc = run_json("check", "--matrix-n", 3)
    assert proc.returncode == 0 and doc["status"] == "pass"
    proc, doc = run_json("check", "--input", FIXTURES / "zero2.json")
    assert proc.returncode == 0 and doc["status"] == "pass"
    proc, doc = run_json("check", "--input", FIXTURES / "corrupted.json")
    assert proc.returncode == 1
    assert doc["violation"]["tuple"] == [1, 1, 1, 2, 3]
    text = run("check", "--input", FIXTURES / "corrupted.json")
    assert text.returncode == 1 and "FAIL" in text.stdout


def test_dim_examples():
    assert run("dim", "--matrix-n", 2).stdout.strip() == "17"
    assert run("dim", "--matrix-n", 3).stdout.strip() == "37"
    proc, doc = run_json("dim", "--input", FIXTURES / "downup.json", "--max-degree", 12)
    assert proc.returncode == 0
    assert not doc["finite"] and doc["dim"] is None
    assert doc["counts"] == [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42, 49]


def test_growth():
    proc, doc = run_json("growth", "--input", FIXTURES / "downup.json", "--max-degree", 8)
    assert doc["graph"] == {"vertices": 4, "edges": 6, "cycle": True}
    proc, doc = run_json("growth", "--matrix-n", 2)
    assert doc["finite"] and not doc["graph"]["cycle"]
    assert doc["counts"] == [1, 4, 7, 4, 1]


def test_mul_examples():
    assert run("mul", "--matrix-n", 2, "e[1,1]^5", "1").stdout.strip() == "e[1,1]"
    assert run("mul", "--matrix-n", 2, "e[1,1]", "e[2,2]").stdout.strip() == "0"
    proc, doc = run_json("mul", "--matrix-n", 2, "(1/2+1*i)*e[1,2]", "e[2,1]")
    assert proc.returncode == 0 and doc["product"]


def test_oracle_diff():
    for n, pairs in ((2, 289), (3, 1369)):
        proc, doc = run_json("oracle-diff", "--matrix-n", n)
        assert proc.returncode == 0
        assert doc["pairs_checked"] == pairs and doc["mismatch_count"] == 0


def test_center_decompose_reps():
    proc, doc = run_json("center", "--matrix-n", 3)
    assert proc.returncode == 0 and doc["dim"] == 5
    proc, doc = run_json("decompose", "--matrix-n", 2)
    assert proc.returncode == 0 and doc["blocks"] == [1, 2, 2, 2, 2]
    proc, doc = run_json("reps", "--matrix-n", 2)
    assert proc.returncode == 0
    assert all(r["homomorphism"] for r in doc["representations"])
    assert len(doc["pairs"]) == 6 and all(p["inequivalent"] for p in doc["pairs"])


@pytest.mark.parametrize(
    "command", ["check", "gb", "dim", "basis", "table", "oracle-diff", "center", "decompose", "reps", "growth"]
)
def test_every_json_output_validates(command):
    proc, doc = run_json(command, "--matrix-n", 2)
    assert proc.returncode == 0


def test_degree_bound_exceeded():
    proc, doc = run_json("gb", "--matrix-n", 2, "--max-degree", 3)
    assert proc.returncode == 2
    assert doc["status"] == "degree_bound_exceeded" and doc["elements"]
    assert run("dim", "--matrix-n", 2, "--max-degree", 3).returncode == 2


def test_env_degree_override():
    assert run("dim", "--matrix-n", 2, env_extra={"NCGB_MAX_DEGREE": "3"}).returncode == 2
    assert run("dim", "--matrix-n", 2, "--max-degree", 9, env_extra={"NCGB_MAX_DEGREE": "3"}).returncode == 0
    assert run("dim", "--matrix-n", 2, env_extra={"NCGB_MAX_DEGREE": "2"}).returncode == 3


@pytest.mark.parametrize(
    "args",
    [
        ["dim"],
        ["dim", "--matrix-n", 1],
        ["dim", "--matrix-n", 2, "--input", FIXTURES / "zero2.json"],
        ["dim", "--input", FIXTURES / "missing.json"],
        ["dim", "--matrix-n", 2, "--max-degree", 2],
        ["dim", "--matrix-n", 2, "--mode", "other"],
        ["mul", "--matrix-n", 2, "e[9,9]", "1"],
        ["center", "--input", FIXTURES / "downup.json"],
        ["nosuch"],
    ],
)
def test_input_errors(args):
    proc = run(*args)
    assert proc.returncode == 3
    assert proc.stdout == ""
