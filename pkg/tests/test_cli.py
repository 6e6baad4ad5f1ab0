"""Command-line behavior: JSON shape, determinism, exit codes, and the
bundled reproduction suite."""

import json
import subprocess
import sys

import pytest

from thetakit import cli
from thetakit.bounds import BoundReport, make_report
from thetakit.graphs import petersen
from thetakit.io import write_edge_list


def run(argv, capsys):
    rc = cli.main(argv)
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_analyze_json_shape(capsys):
    rc, out, _ = run(["analyze", "--gen", "petersen",
                      "--tasks", "spectrum,theta,srg", "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["graph"]["n"] == 10 and doc["graph"]["edges"] == 15
    assert doc["tasks"]["theta"]["theta"] == 4
    assert doc["tasks"]["theta"]["method"] == "closed-form"
    assert doc["tasks"]["srg"]["params"] == [10, 3, 0, 1]
    eig = doc["tasks"]["spectrum"]["eigenvalues"]
    assert [e["multiplicity"] for e in eig] == [1, 5, 4]
    assert doc["violations"] == []


def test_analyze_reports_round_trip(capsys):
    rc, out, _ = run(["analyze", "--gen", "petersen", "--tasks",
                      "product-bounds", "--power", "2", "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    payload = doc["tasks"]["product-bounds"]
    assert payload["product_order"] == 100
    for d in payload["reports"]:
        r = BoundReport(**d)
        assert r.holds(1e-6)


def test_analyze_deterministic(capsys):
    argv = ["analyze", "--gen", "cycle:7",
            "--tasks", "spectrum,theta,ramanujan", "--json"]
    rc1, out1, _ = run(argv, capsys)
    rc2, out2, _ = run(argv, capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_analyze_capacity_and_chi(capsys):
    rc, out, _ = run(["analyze", "--gen", "petersen", "--tasks",
                      "capacity,chromatic-bounds", "--exact-chi",
                      "--budget", "30", "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    cap = doc["tasks"]["capacity"]
    assert cap["status"] == "determined" and cap["capacity"] == 4
    cb = doc["tasks"]["chromatic-bounds"]
    assert cb["chi"] == 3 and cb["chi_lower_from_theta"] == 3


def test_analyze_k0_gate(capsys):
    rc, out, _ = run(["analyze", "--gen", "complete_bipartite:3:3",
                      "--tasks", "k0", "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    payload = doc["tasks"]["k0"]
    assert payload["applicable"] is False
    rc, out, _ = run(["analyze", "--gen", "petersen", "--tasks", "k0",
                      "--json"], capsys)
    doc = json.loads(out)
    assert doc["tasks"]["k0"]["applicable"] is True
    assert doc["tasks"]["k0"]["k0"] >= 3


def test_exit_input_errors(capsys):
    rc, _, err = run(["analyze", "--gen", "nope"], capsys)
    assert rc == 1 and "error:" in err
    rc, _, err = run(["analyze", "--g6", "/nonexistent/file.g6"], capsys)
    assert rc == 1 and "error:" in err
    rc, _, err = run(["analyze", "--gen", "petersen", "--tasks", "bogus"],
                     capsys)
    assert rc == 1 and "error:" in err
    rc, _, err = run(["analyze"], capsys)
    assert rc == 1
    rc, _, err = run([], capsys)
    assert rc == 1


def test_exit_violation_is_loud(capsys, monkeypatch):
    def broken_task(g, args):
        return {"x": 1}, [make_report("impossible-bound", 2.0, 1.0, "<=")]

    monkeypatch.setitem(cli._TASK_FNS, "spectrum", broken_task)
    rc, out, _ = run(["analyze", "--gen", "petersen", "--tasks", "spectrum",
                      "--json"], capsys)
    assert rc == 2
    doc = json.loads(out)
    assert doc["violations"] == ["impossible-bound"]


def test_power_table_with_materialize(capsys):
    rc, out, _ = run(["power", "--gen", "petersen", "-k", "2",
                      "--materialize", "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["theta_factor"] == 4.0
    rows = doc["rows"]
    assert [r["k"] for r in rows] == [1, 2]
    for r in rows:
        assert r["lambda2"] == pytest.approx(r["lambda2_dense"], abs=1e-6)
        assert r["lambda_min"] == pytest.approx(r["lambda_min_dense"], abs=1e-6)
        assert r["eig2_lower"] <= r["lambda2"] + 1e-9
        assert r["lambda_min"] <= r["eigmin_upper"] + 1e-9
    assert rows[0]["is_ramanujan"] is True


def test_power_trivial_and_input_gate(capsys):
    rc, out, _ = run(["power", "--gen", "complete:4", "-k", "3", "--json"],
                     capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["trivial"] == "complete"
    rc, _, err = run(["power", "--gen", "path:4"], capsys)
    assert rc == 1 and "regular" in err


def test_power_plain_table_no_ansi(capsys):
    rc, out, _ = run(["power", "--gen", "petersen", "-k", "3"], capsys)
    assert rc == 0
    assert "\x1b" not in out
    assert "alon_boppana" in out


def test_catalog_listing(capsys):
    rc, out, _ = run(["catalog", "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    names = {e["name"] for e in doc["entries"]}
    for want in ("petersen", "paley", "hall_janko", "cameron",
                 "suzuki-params"):
        assert want in names
    suzuki = next(e for e in doc["entries"] if e["name"] == "suzuki-params")
    assert suzuki["srg"] == [1782, 416, 100, 96]
    rc, out, _ = run(["catalog"], capsys)
    assert rc == 0 and "\x1b" not in out and "petersen" in out


def test_out_file_matches_stdout(tmp_path, capsys):
    target = tmp_path / "report.json"
    rc, out, _ = run(["analyze", "--gen", "petersen", "--tasks", "srg",
                      "--json", "--out", str(target)], capsys)
    assert rc == 0
    assert target.read_text() == out


def test_edge_list_source(tmp_path, capsys):
    path = tmp_path / "pet.edges"
    write_edge_list(petersen(), str(path))
    rc, out, _ = run(["analyze", "--edges", str(path), "--tasks", "srg",
                      "--json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["tasks"]["srg"]["strongly_regular"] is True


def test_paper_examples_all_pass(capsys):
    rc, out, _ = run(["--paper-examples"], capsys)
    assert rc == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 17
    assert all(l.startswith("PASS") for l in lines)
    assert "17/17 examples reproduced" in out


def test_console_entry_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "thetakit.cli", "catalog", "--json"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert any(e["name"] == "petersen" for e in doc["entries"])
