import csv
import io
import json
import subprocess
import sys

import pytest

from harmonia.cli import BENCH_COLUMNS, ComputationResult, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_exact_partition(capsys):
    code, out, _ = run(capsys, "compute", "partition", "--s", "4", "--method", "exact")
    d = json.loads(out)
    assert code == 0
    assert d["quantity"] == "partition" and d["s"] == 4 and d["method"] == "exact"
    assert d["value"] == "5"


def test_compute_oracle_bose(capsys):
    code, out, _ = run(capsys, "compute", "bose", "--N", "2", "--s", "3", "--method", "oracle")
    assert code == 0 and json.loads(out)["value"] == "6"


def test_compute_quad(capsys):
    code, out, _ = run(capsys, "compute", "partition", "--s", "3", "--method", "quad",
                       "--form", "combined43")
    d = json.loads(out)
    assert code == 0
    assert abs(d["float_value"] - 3) <= 1e-9 and d["abs_err"] <= 1e-9
    assert d["exactness_degree"] >= 30 and d["nodes"] == 9


def test_compute_brute_and_rules(capsys):
    code, out, _ = run(capsys, "compute", "bose", "--N", "4", "--s", "3", "--method", "brute")
    assert json.loads(out)["value"] == "15"
    code, out, _ = run(capsys, "compute", "bose", "--N", "2", "--s", "2", "--method", "quad",
                       "--rule", "gauss", "--nodes", "40")
    assert code == 0 and json.loads(out)["abs_err"] < 1e-9


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "partition", "--s", "60", "--method", "oracle")
    d = json.loads(out)
    assert d["value"] == "966467"
    rec = ComputationResult.from_dict(d)
    assert rec.to_dict() == d
    big = ComputationResult("partition", {"s": 1000}, "oracle", value=str(10 ** 40 + 1))
    back = ComputationResult.from_dict(json.loads(json.dumps(big.to_dict())))
    assert back == big and int(back.value) == 10 ** 40 + 1


@pytest.mark.parametrize("argv", [
    ["compute", "bose", "--s", "3"],
    ["compute", "bose", "--N", "1", "--s", "0"],
    ["compute", "partition", "--s", "3", "--form", "sine18"],
    ["compute", "bose", "--N", "0", "--s", "3", "--method", "quad", "--form", "sine18"],
    ["compute", "partition", "--s", "3", "--nodes", "0"],
    ["verify", "--budget", "10"],
    ["compute", "bose", "--N", "12", "--s", "12", "--method", "brute", "--budget", "1000"],
])
def test_invalid_arguments_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as e:
        code = e.code
    assert code == 2
    assert capsys.readouterr().err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max-s", "10", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [int(r["mu"]) for r in rows] == [-1, 2, 12, 32, 65, 114, 182, 272, 387, 530]
    code, out, _ = run(capsys, "table", "--max-s", "1", "--format", "json")
    assert json.loads(out) == [{"s": 1, "mu": -1, "p_exact": "1", "p_oracle": "1", "match": True}]
    code, out, _ = run(capsys, "table", "--max-s", "20", "--format", "csv")
    assert code == 0 and all(r["match"] == "True" for r in csv.DictReader(io.StringIO(out)))


def test_table_mismatch_exits_1(capsys, monkeypatch):
    import harmonia.cli as cli
    monkeypatch.setattr(cli.orc, "partition_oracle", lambda s: 0)
    code, _, _ = run(capsys, "table", "--max-s", "3")
    assert code == 1


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "parity")
    assert code == 0 and json.loads(out)["failed"] == 0
    import harmonia.suites as suites
    monkeypatch.setattr(suites.orc, "pentagonal_oracle", lambda s: -1)
    code, out, err = run(capsys, "verify", "--suite", "oracles")
    assert code == 1 and json.loads(out)["failed"] > 0 and "failed" in err


def test_verify_identities_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--suite", "identities", "--seed", "42")
    _, b, _ = run(capsys, "verify", "--suite", "identities", "--seed", "42", "--threads", "1")
    assert a == b and json.loads(a)["failed"] == 0


def test_out_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HARMONIA_OUT_DIR", str(tmp_path))
    code, out, _ = run(capsys, "compute", "bose", "--N", "3", "--s", "3")
    assert code == 0 and out == ""
    assert json.loads((tmp_path / "compute.json").read_text())["value"] == "10"
    explicit = tmp_path / "sub" / "t.csv"
    run(capsys, "table", "--format", "csv", "--out", str(explicit))
    assert explicit.read_text().startswith("s,mu,")


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--partition-s", "5,10,20,30")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == BENCH_COLUMNS
    assert [r["param"] for r in rows if r["task"] == "partition_exact"] == \
        ["s=5", "s=10", "s=20", "s=30"]
    trap = [r for r in rows if r["task"] == "partition_quad_trapezoid"]
    assert len(trap) == 3 and all(float(r["abs_err"]) <= 1e-9 for r in trap)
    for s in ("s=100", "s=500"):
        d = {r["task"]: r["value_digest"] for r in rows if r["param"] == s}
        assert d["pentagonal_oracle"] == d["euler_dp_oracle"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "harmonia", "compute", "partition", "--s", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == "7"
    proc = subprocess.run([sys.executable, "-m", "harmonia", "bogus"], capture_output=True)
    assert proc.returncode == 2
