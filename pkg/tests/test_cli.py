import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from gkzrank.cli import main
from gkzrank.ktheory import verify_theorem
from gkzrank.report import build_report, report_from_dict, report_to_dict

GOLDEN = Path(__file__).parent / "golden"


def run_cli(args):
    out = io.StringIO()
    err = io.StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(args)
    finally:
        sys.stdout, sys.stderr = old_out, old_err
    return code, out.getvalue(), err.getvalue()


def test_validate_builtin():
    code, out, _ = run_cli(["validate", "a3"])
    assert code == 0
    assert "dim: 2" in out and "n: 5" in out and "height: [1, 0]" in out
    assert "faces: 3" in out


def test_validate_kp2():
    code, out, _ = run_cli(["validate", "kp2"])
    assert code == 0
    assert "dim: 3" in out and "n: 4" in out


def test_validate_file(tmp_path):
    doc = {"dim": 2, "points": [[1, 0], [1, 1]], "name": "segment"}
    path = tmp_path / "seg.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(["validate", str(path)])
    assert code == 0
    assert "n: 2" in out


def test_exit_code_invalid_inputs(tmp_path):
    code, _, err = run_cli(["validate", str(tmp_path / "missing.json")])
    assert code == 2 and "cannot read" in err

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(["validate", str(bad)])
    assert code == 2 and "malformed document" in err

    dup = tmp_path / "dup.json"
    dup.write_text(json.dumps({"dim": 2, "points": [[1, 0], [1, 0]]}))
    code, _, err = run_cli(["validate", str(dup)])
    assert code == 2 and "duplicate point" in err


def test_exit_code_budget():
    code, out, _ = run_cli(["edet", "a3", "--budget", "0.0"])
    assert code == 3
    assert "BUDGET EXCEEDED" in out
    assert "incomplete" in out


def test_secondary_output():
    code, out, _ = run_cli(["secondary", "a3"])
    assert code == 0
    assert "dim: 3" in out and "vertices: 8" in out


def test_edge_pair():
    code, out, _ = run_cli(["edge", "f2", "--pair", "2", "3"])
    assert code == 0
    assert "circuit: indices [1, 2, 3] relation [1, -2, 1]" in out
    assert "separating sets: [[0]]" in out
    code, _, err = run_cli(["edge", "a3", "--pair", "0", "7"])
    assert code == 2 and "not an edge" in err


def test_example_verb():
    code, out, _ = run_cli(["example", "kp2"])
    assert code == 0
    assert json.loads(out)["points"] == [[0, 0, 1], [1, 0, 1], [0, 1, 1], [-1, -1, 1]]
    code, _, err = run_cli(["example", "nope"])
    assert code == 2


def test_verify_exit_zero():
    code, out, _ = run_cli(["verify", "kp2"])
    assert code == 0
    assert "status: pass" in out


def test_multiplicities_output():
    code, out, _ = run_cli(["multiplicities", "kp2"])
    assert code == 0
    assert "edge [0, 1]" in out


def test_determinism_byte_identical():
    for args in (["verify", "f2", "--json"], ["edet", "a3", "--json"], ["secondary", "a3"]):
        _, first, _ = run_cli(args)
        _, second, _ = run_cli(args)
        assert first == second


@pytest.mark.parametrize("name", ["a3", "kp2", "f2"])
@pytest.mark.parametrize("command", ["verify", "edet", "secondary"])
def test_golden_outputs(name, command):
    expected = (GOLDEN / ("%s_%s.json" % (name, command))).read_text()
    code, out, _ = run_cli([command, name, "--json"])
    assert code == 0
    assert out == expected


def test_report_round_trip(kp2):
    rep = build_report(verify_theorem(kp2), "kp2")
    data = json.loads(json.dumps(report_to_dict(rep)))
    assert report_from_dict(data) == rep
    assert report_to_dict(report_from_dict(data)) == data


def test_env_budget_override(a3, monkeypatch):
    monkeypatch.setenv("GKZ_BUDGET_SECS", "0.0")
    from gkzrank.elimination import default_budget_seconds

    assert default_budget_seconds() == 0.0
    code, out, _ = run_cli(["edet", "a3"])
    assert code == 3
    monkeypatch.delenv("GKZ_BUDGET_SECS")
    assert default_budget_seconds() == 60.0


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "gkzrank.cli", "validate", "a3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "dim: 2" in proc.stdout


def test_verification_failure_exit_code_mapping():
    # the CLI maps a failing report to exit code 1; exercise the mapping by
    # patching the verifier with a failing record
    import gkzrank.cli as cli_mod

    class FakeEdet:
        factors = ()
        e_a = None

    class FakeReport:
        def __init__(self):
            from gkzrank.polytope import validate_aset

            self.aset = validate_aset(2, [(1, 0), (1, 1)])
            self.triangulation_count = 1
            self.face_ranks = ()
            self.edges = ()
            self.edet = FakeEdet()
            self.status = "fail"

    original = cli_mod.verify_theorem
    cli_mod.verify_theorem = lambda aset, budget: FakeReport()
    try:
        code, out, _ = run_cli(["verify", "a3"])
    finally:
        cli_mod.verify_theorem = original
    assert code == 1
    assert "status: fail" in out
