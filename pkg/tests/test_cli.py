import json
import subprocess
import sys

import pytest

from prunefront.cli import EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_markov_table1(capsys):
    code, out, _ = run(capsys, "markov", "table1.rects")
    assert code == EXIT_OK
    assert "lambda = 1.465571" in out and "log lambda = 0.382245" in out
    code, out, _ = run(capsys, "markov", "table1.rects", "--disks", "example3.disks")
    assert code == EXIT_OK and "partition: ok" in out


def test_markov_json(capsys):
    code, out, _ = run(capsys, "--json", "markov", "table1.rects")
    rec = json.loads(out)
    assert rec["names"][0] == "R_1" and rec["matrix"][0] == [0, 0, 0, 0, 0, 0, 0, 1]


def test_check_codes(capsys):
    code, out, _ = run(capsys, "check", "example3.disks")
    assert code == EXIT_OK and "order: D_1 < D_2" in out
    code, out, _ = run(capsys, "check", "example1_bad.disks")
    assert code == EXIT_FAIL and "violation forward-C n=1" in out
    code, _, _ = run(capsys, "check", "example3.disks", "--bound", "4")
    assert code == EXIT_OK


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "check", "no-such.disks")[0] == EXIT_USAGE
    bad = tmp_path / "bad.disks"
    bad.write_text("disk A = ([0].0[10], [0].1[1)\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == EXIT_USAGE and "bad.disks:1:29:" in err
    assert run(capsys, "plot", "example3.disks", "--range", "3..1", "--depth", "2")[0] == EXIT_USAGE
    assert run(capsys, "entropy", "example3.disks")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "--budget", "0", "check", "example3.disks")[0] == EXIT_USAGE


def test_entropy_and_budget(capsys, monkeypatch):
    code, out, _ = run(capsys, "entropy", "empty.disks", "--level", "3")
    assert code == EXIT_OK and "0.693147 <= h <= 0.693147" in out
    assert run(capsys, "--budget", "30", "entropy", "example3.disks", "--level", "6")[0] == EXIT_RESOURCE
    monkeypatch.setenv("PRUNEFRONT_NODE_BUDGET", "30")
    assert run(capsys, "entropy", "example3.disks", "--level", "6")[0] == EXIT_RESOURCE


def test_hard_cap_is_resource_error(capsys):
    assert main(["check", "example3.disks", "--hard-cap", "5"]) == EXIT_RESOURCE


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "example3.disks", "--max-period", "4")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "6 surviving orbits of period <= 4"
    code, out, _ = run(capsys, "--json", "orbits", "empty.disks", "--max-period", "2")
    assert [json.loads(x)["orbit"] for x in out.splitlines()] == ["[0]", "[1]", "[10]"]


def test_scan_family_deterministic(capsys):
    args = ["--json", "scan-family", "kneading_family.txt", "--level", "3"]
    first = run(capsys, *args)
    again = run(capsys, *args)
    parallel = run(capsys, *args, "--workers", "3")
    assert first == again == parallel
    recs = [json.loads(x) for x in first[1].splitlines()]
    assert [r["kappa"] for r in recs] == ["[0]", "[100]", "[10]", "[1000100]", "[1001]", "1[0]"]
    assert all(r["verdict"] == "pass" and r["kneading"] for r in recs)
    assert recs[-1]["lower"] == pytest.approx(0.693147, abs=1e-6)


def test_plot(capsys, tmp_path):
    target = tmp_path / "ex3.svg"
    code, out, _ = run(capsys, "plot", "example3.disks", "--range=-1..1", "--depth", "3", "-o", str(target))
    assert code == EXIT_OK and target.read_text().startswith("<?xml")
    code, out, _ = run(capsys, "plot", "example3.disks", "--range", "0..0", "--depth", "2", "--format", "csv")
    assert out.splitlines()[0] == "n,disk,x0,x1,y0,y1"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "prunefront.cli", "check", "example1_bad.disks"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == EXIT_FAIL
