import json
import subprocess
import sys

import pytest

from hecke_cell_lab import cli


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return json.loads(out)["body"]["records"]


def run_subprocess(args, env=None):
    proc = subprocess.run([sys.executable, "-m", "hecke_cell_lab.cli"] + args,
                          capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout


def test_thm35_a1_quadratic_point(capsys):
    code, out, _ = run(["verify", "thm35", "--type", "A1", "--q", "-1"], capsys)
    assert code == 0
    recs = records(out)
    dims = [r for r in recs if r["check"] == "dim CH_tC' = 0"]
    assert len(dims) == 1 and dims[0]["verdict"] == "PASS"


def test_cells_a1(capsys):
    code, out, _ = run(["verify", "cells", "--type", "A1", "--max-len", "8"], capsys)
    assert code == 0
    body = json.loads(out)["body"]
    census = [r for r in body["records"] if r["check"] == "counts in length shell"]
    assert len(census) == 9
    assert body["summary"]["FAIL"] == 0


def test_formulas_a2(capsys):
    code, out, _ = run(["verify", "formulas", "--type", "A2"], capsys)
    assert code == 0
    anchors = {r["anchor"]: r["verdict"] for r in records(out) if r["verdict"] != "REPORT-ONLY"}
    for name in ("C theta_x C as a Weyl-ratio sum", "C' theta_-rho C as a subset sum",
                 "C' theta_rho C as a subset sum", "C theta_-rho C' as a subset sum",
                 "C theta_rho C' as a subset sum"):
        assert anchors[name] == "PASS"


def test_every_record_has_anchor_and_verdict(capsys):
    code, out, _ = run(["verify", "prop12", "--type", "A1", "--max-len", "6"], capsys)
    assert code == 0
    for r in records(out):
        assert r["anchor"] and r["verdict"] in ("PASS", "FAIL", "REPORT-ONLY")


def test_exit_code_on_failure(capsys, monkeypatch):
    def failing(cfg, report):
        report.add("forced", "always fails", {}, {}, cli.FAIL)
        report.add("forced", "report only", {}, {}, cli.REPORT)
    monkeypatch.setitem(cli.RUNNERS, "cells", failing)
    code, out, _ = run(["verify", "cells", "--type", "A1"], capsys)
    assert code == 1
    assert json.loads(out)["body"]["summary"] == {"PASS": 0, "FAIL": 1, "REPORT-ONLY": 1}


def test_report_only_does_not_fail(capsys, monkeypatch):
    def reporting(cfg, report):
        report.add("forced", "report only", {}, {}, cli.REPORT)
    monkeypatch.setitem(cli.RUNNERS, "cells", reporting)
    assert run(["verify", "cells", "--type", "A1"], capsys)[0] == 0


@pytest.mark.parametrize("argv", [
    ["verify", "thm35", "--type", "A1", "--q", "4", "--sqrt-q", "2"],
    ["verify", "thm35", "--type", "A1", "--q", "0"],
    ["verify", "cells", "--type", "A1", "--max-len", "99"],
    ["verify", "lie-check", "--type", "B2"],
    ["verify", "thm34", "--type", "A1", "--points", "/nonexistent/points.json"],
    ["verify", "thm34", "--type", "A1", "--jobs", "0"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch", "--type", "A1"],
    ["verify", "cells", "--type", "E8"],
    ["verify", "thm35", "--type", "A1", "--q", "abc"],
])
def test_argparse_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
    capsys.readouterr()


def test_points_file(tmp_path, capsys):
    pts = tmp_path / "points.json"
    pts.write_text(json.dumps({"points": [
        {"label": "three", "q0": "4", "coords": ["3"]},
        {"label": "minus", "sqrt_q": "-3", "coords": ["-1"]},
    ]}))
    code, out, _ = run(["verify", "thm41", "--type", "A1", "--points", str(pts)], capsys)
    assert code == 0
    recs = records(out)
    three = [r for r in recs if r["inputs"].get("point") == "three"]
    assert three and three[0]["values"]["dim"] == 2
    assert three[0]["inputs"]["t"] == ["3"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"points": [{"q0": "4", "coords": ["3", "4"]}]}))
    assert run(["verify", "thm41", "--type", "A1", "--points", str(bad)], capsys)[0] == 2


def test_tsv_output(capsys):
    code, out, _ = run(["verify", "cells", "--type", "A1", "--max-len", "3", "--format", "tsv"],
                       capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "anchor\tcheck\tverdict\tinputs\tvalues"
    assert all(len(line.split("\t")) == 5 for line in lines)


def test_exact_scalar_strings(capsys):
    code, out, _ = run(["verify", "thm35", "--type", "A1", "--q", "-1"], capsys)
    assert json.loads(out)["body"]["records"][0]["inputs"]["t"] == ["0 + 1v"]


def test_parallel_matches_serial():
    base = ["verify", "thm41", "--type", "A1"]
    c1, o1 = run_subprocess(base + ["--jobs", "1"])
    c2, o2 = run_subprocess(base + ["--jobs", "2"])
    assert c1 == c2 == 0
    assert json.loads(o1)["body"] == json.loads(o2)["body"]


def test_determinism_and_cache_transparency(tmp_path):
    args = ["verify", "lemma22", "--type", "A1", "--max-len", "6", "--cache-dir", str(tmp_path)]
    code1, cold = run_subprocess(args)
    code2, warm = run_subprocess(args)
    assert code1 == code2 == 0
    cold, warm = json.loads(cold), json.loads(warm)
    assert cold["meta"]["cache"]["kl_computed"] > 0
    assert warm["meta"]["cache"]["loaded"] > 0 and warm["meta"]["cache"]["kl_computed"] == 0
    assert json.dumps(cold["body"], sort_keys=True) == json.dumps(warm["body"], sort_keys=True)
    path = tmp_path / "kl_A1.bin"
    data = bytearray(path.read_bytes())
    data[30] ^= 0x01
    path.write_bytes(bytes(data))
    code3, poisoned = run_subprocess(args)
    assert code3 == 0
    poisoned = json.loads(poisoned)
    assert poisoned["meta"]["cache"]["rejected"] >= 1
    assert poisoned["body"] == cold["body"]
