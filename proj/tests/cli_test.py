#!/usr/bin/env python3
"""Exit codes and output shape of the ehrkit command line.

usage: cli_test.py EHRKIT CORPUS_DIR
"""
import json
import os
import pathlib
import shutil
import subprocess
import sys
import tempfile

EHRKIT, CORPUS = sys.argv[1], pathlib.Path(sys.argv[2])
failures = []


def run(*args, env=None):
    return subprocess.run([EHRKIT, *map(str, args)], capture_output=True, text=True, env=env)


def expect(cond, what):
    if not cond:
        failures.append(what)


def expect_exit(code, *args, env=None):
    out = run(*args, env=env)
    expect(out.returncode == code, f"{' '.join(map(str, args))}: exit {out.returncode}, want {code}: {out.stderr}")
    return out


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    (tmp / "bad.json").write_text("{")
    (tmp / "point.json").write_text('{"name": "pt", "vrep": {"vertices": [["1", "1"]]}}')
    (tmp / "zero_dim.json").write_text('{"name": "z", "vrep": {"vertices": [[]]}}')
    (tmp / "ray.json").write_text('{"name": "ray", "hrep": {"rows": [[-1, 0]]}}')
    expect_exit(2, "analyze", tmp / "bad.json")
    expect_exit(2, "analyze", tmp / "missing.json")
    expect_exit(2, "frobnicate")
    expect_exit(3, "analyze", tmp / "point.json")
    expect_exit(3, "analyze", tmp / "zero_dim.json")
    expect_exit(3, "analyze", tmp / "ray.json")
    expect_exit(4, "--budget", 10, "count", CORPUS / "p1.json", "--dilate", 100)
    env = dict(os.environ, EHRKIT_BUDGET="10")
    expect_exit(4, "count", CORPUS / "p1.json", "--dilate", 100, env=env)
    expect_exit(5, "decompose", CORPUS / "haasenlieblingsdreieck.json")
    expect_exit(5, "htilde", CORPUS / "p3.json")

    # corpus: empty dir passes, corrupted golden fails with a diff
    empty = tmp / "empty"
    empty.mkdir()
    out = expect_exit(0, "corpus", empty)
    expect("0 entries, 0 failed" in out.stdout, "empty corpus summary")
    broken = tmp / "broken"
    broken.mkdir()
    shutil.copy(CORPUS / "p2.json", broken / "p2.json")
    (broken / "p2.golden.json").write_text('{"expect": {"series": {"zrational": {"m": 4}}}}')
    out = expect_exit(1, "corpus", broken)
    expect("series.zrational.m: expected 4, got 3" in out.stdout, "corrupted golden diff: " + out.stdout)

out = expect_exit(0, "period", CORPUS / "p2.json")
expect(out.stdout.strip() == "period 3/2, collapse: yes (bound 3)", "period text: " + out.stdout)
out = expect_exit(0, "count", CORPUS / "p3.json", "--dilate", "1/4")
expect(out.stdout.strip() == "0", "count P3 at 1/4")
out = expect_exit(0, "count", CORPUS / "nabla.json", "--dilate", 2, "--region", "open")
expect(out.stdout.strip() == "2", "interior count of 2 nabla")
out = expect_exit(0, "series", CORPUS / "p2.json", "--text")
expect(out.stdout.splitlines()[0] == "(1 + t^(1/2) + t)/((1 - t^(3/2))^2)", "series text: " + out.stdout)
out = expect_exit(0, "--json", "series", CORPUS / "p3.json", "--kind", "refined")
expect(json.loads(out.stdout)["numerator"] == {"0": "1", "1/2": "1", "3/4": "1", "5/4": "1"}, "series json")
out = expect_exit(0, "series", CORPUS / "p2.json", "--json", "--m", 6)
expect(json.loads(out.stdout)["m"] == 6, "--m after the subcommand")
out = expect_exit(0, "gorenstein", CORPUS / "seg_1_4.json", "--gamma", "2r")
expect("not 8-rational Gorenstein" in out.stdout, "seg gorenstein text: " + out.stdout)
out = expect_exit(0, "--json", "gorenstein", CORPUS / "p2.json")
expect(json.loads(out.stdout)["gorenstein_point"] == [4, 1], "P2 gorenstein json")
out = expect_exit(0, "decompose", CORPUS / "cross_polytope.json")
expect("a(t) = 1 + 2t + t^2" in out.stdout and "verified: h*(t) = a(t) + t b(t)" in out.stdout, "decompose text")
out = expect_exit(0, "decompose", "--rational", CORPUS / "segment_half.json")
expect("a(t) = 1 + t + t^2 + t^3" in out.stdout, "rational decompose text")
out = expect_exit(0, "htilde", CORPUS / "haasenlieblingsdreieck.json")
expect(out.stdout.startswith("h~(t) = 1 + 2t^(1/2) + t"), "htilde text")
out = expect_exit(0, "quasipoly", CORPUS / "p6.json", "--kind", "classical")
expect("n = 1 mod 2: 1/2 + (1/2)l" in out.stdout, "quasipoly text: " + out.stdout)
out = expect_exit(0, "--json", "analyze", CORPUS / "p2.json")
report = json.loads(out.stdout)
expect(report["codenominator"] == 2 and report["series"]["zrational"]["m"] == 3, "analyze P2")
expect(report["gorenstein"]["r"]["gorenstein_point"] == [4, 1], "analyze P2 gorenstein")
out = expect_exit(0, "--json", "analyze", CORPUS / "seg_1_4.json")
expect(json.loads(out.stdout)["gorenstein"]["2r"]["is_gorenstein"] is False, "analyze seg_1_4")
expect_exit(0, "--help")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
