from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from sigrel import cli


def test_coordinatize_default_fixture(tmp_path, capsys):
    assert cli.main(["coordinatize", "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "coordinatize.json").read_text(encoding="utf-8"))
    assert report["schema"] == "sigrel.cli/1" and report["ok"]
    assert "out" not in report["config"] and "figures" not in report["config"]
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert rows and all(r["status"] == "pass" for r in rows)


def test_boosted_frame_from_file(tmp_path):
    frame = tmp_path / "frame.json"
    frame.write_text(json.dumps({"velocity": ["3/5", "0", "0"], "origin": ["0", "0", "0", "0"], "unit": "1"}))
    assert cli.main(["coordinatize", "--frame", str(frame), "--out", str(tmp_path / "r")]) == 0


def test_failing_check_exits_one(tmp_path):
    assert cli.main(["check-axioms", "--axiom", "AxSym", "--samples", "10", "--out", str(tmp_path)]) == 1
    assert cli.main(["check-axioms", "--axiom", "AxSym", "--tu", "--samples", "5", "--out", str(tmp_path)]) == 0


@pytest.mark.parametrize("args", [
    ["check-axioms", "--eps", "0"],
    ["check-axioms", "--samples", "0"],
    ["check-axioms", "--axiom", "AxNope"],
    ["translate"],
    ["translate", "--golden", "no-such-set"],
    ["translate", "--spec", "lines", "missing-file.sexp"],
    ["no-such-command"],
])
def test_configuration_errors_exit_two(args, tmp_path, capsys):
    assert cli.main([*args, "--out", str(tmp_path)]) == 2
    capsys.readouterr()


def test_translate_formula_file(tmp_path, capsys):
    src = tmp_path / "f.sexp"
    src.write_text("; @free x Points\n; @name somewhere\n(exists (ℓ Lines) (I x ℓ))\n", encoding="utf-8")
    assert cli.main(["translate", "--spec", "lines", str(src), "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "translate.json").read_text(encoding="utf-8"))
    assert report["report"]["translations"] == [{"name": "somewhere", "text": "∃ℓ_p,ℓ_q ℓ_p≠ℓ_q,Col(x,ℓ_p,ℓ_q)"}]


def test_scenario_gen_writes_a_loadable_scenario(tmp_path):
    assert cli.main(["scenario", "gen", "--particles", "3", "--signals", "4", "--witnesses", "--seed", "2",
                     "--out", str(tmp_path)]) == 0
    path = tmp_path / "scenario.json"
    assert json.loads(path.read_text())["particles"]
    assert cli.main(["coordinatize", "--scenario", str(path), "--out", str(tmp_path / "c")]) == 0


def test_figures_are_png(tmp_path):
    assert cli.main(["tu-separation", "--samples", "10", "--figures", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "tu-separation.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "sigrel", "translate", "--golden", "lines-clauses",
                           "--out", str(tmp_path)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("check,checked,failures,status")
