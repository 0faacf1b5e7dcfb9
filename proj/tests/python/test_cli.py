"""End-to-end checks of the tit command-line tool (path taken from TIT_BIN)."""

import csv
import json
import os
import subprocess

import pytest

BIN = os.environ.get("TIT_BIN", "tit")


def run(*args, check=True):
    proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, timeout=300)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture()
def halfplane_pbm(tmp_path):
    path = tmp_path / "hp.pbm"
    run("gen", "halfplane", "--n", 24, "--rho", 0.05, "--seed", 3, "--out", path)
    return path


def test_gen_writes_image_and_sidecar(halfplane_pbm):
    data = halfplane_pbm.read_bytes()
    assert data.startswith(b"P4")
    side = json.loads(halfplane_pbm.with_name("hp.pbm.json").read_text())
    assert side["schema"] == "tit.gen/1"
    assert side["property"] == "halfplane"
    assert side["n"] == 24 and side["seed"] == 3
    assert side["flipCount"] == int(0.05 * 24 * 24)


def test_estimate_json_is_deterministic(halfplane_pbm):
    outs = []
    for _ in range(2):
        report = json.loads(run("estimate", "halfplane", halfplane_pbm, "--delta", 0.2, "--seed", 9, "--json").stdout)
        report.pop("wallMillis")
        outs.append(report)
    assert outs[0] == outs[1]
    assert outs[0]["schema"] == "tit.run_report/1"
    assert outs[0]["mode"] == "uniform"


def test_oracle_matches_planted_bound(halfplane_pbm):
    distance = float(run("oracle", "halfplane", halfplane_pbm).stdout)
    assert 0 <= distance <= int(0.05 * 24 * 24) / (24 * 24)


def test_learn_writes_hypothesis(halfplane_pbm, tmp_path):
    out = tmp_path / "hyp.pbm"
    doc = json.loads(run("learn", "halfplane", halfplane_pbm, "--delta", 0.2, "--out", out).stdout)
    assert doc["schema"] == "tit.learn/1"
    assert out.exists()
    assert doc["hypothesisDistance"] <= 0.05 + 0.2


def test_bench_rows(tmp_path):
    out = tmp_path / "bench.csv"
    run("bench", "halfplane", "--trials", 2, "--grid", "n=12,16;delta=0.2;rho=0,0.1", "--seed", 5, "--out", out)
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 8
    assert [int(r["trial"]) for r in rows] == list(range(8))
    assert all(r["schema"] == "tit.bench/1" for r in rows)
    assert all(r["reference_kind"] == "oracle" for r in rows)
    assert [int(r["seed"]) for r in rows] == [5 + i for i in range(8)]
    again = tmp_path / "again.csv"
    run("bench", "halfplane", "--trials", 2, "--grid", "n=12,16;delta=0.2;rho=0,0.1", "--seed", 5, "--out", again)
    assert out.read_text() == again.read_text()


@pytest.mark.parametrize(
    "args, code",
    [
        (["estimate", "halfplane", "{img}", "--delta", "0.3"], 2),
        (["estimate", "roundness", "{img}"], 2),
        (["estimate", "halfplane", "{missing}"], 1),
        (["estimate", "halfplane", "{bad}"], 1),
        (["oracle", "convex", "{img}"], 3),
        (["estimate", "connected", "{img}", "--delta", "0.1", "--mode", "full"], 3),
        (["estimate", "halfplane", "{img}", "--no-such-flag"], 2),
        (["gen", "convex", "--n", "10", "--vertices", "2", "--out", "{tmp}/x.pbm"], 2),
    ],
)
def test_exit_codes(args, code, halfplane_pbm, tmp_path):
    bad = tmp_path / "bad.pbm"
    bad.write_text("P1\n3 4\n")
    subst = {"img": halfplane_pbm, "missing": tmp_path / "none.pbm", "bad": bad, "tmp": tmp_path}
    proc = run(*[a.format(**subst) for a in args], check=False)
    assert proc.returncode == code, proc.stderr
    if code:
        assert proc.stderr.startswith("error: ")
        assert proc.stderr.count("\n") == 1
