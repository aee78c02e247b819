from __future__ import annotations

import json
import subprocess
import sys

import pytest

from pentatile.cli import MATRIX_NAMES, main
from pentatile.render import import_json


def _lines(capsys):
    return dict(line.split("\t", 1) for line in capsys.readouterr().out.splitlines() if "\t" in line)


def test_verify_exit_zero(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out and all(line.split("\t")[0] in {"PASS", "WARN"} for line in out)


def test_verify_failure_exit_one(monkeypatch, capsys):
    from pentatile import verify

    monkeypatch.setattr(verify, "CHECKS", [("forced", lambda: ("FAIL", "x"))])
    monkeypatch.setattr(verify, "_growth", lambda *a: [])
    assert main(["verify"]) == 1
    assert capsys.readouterr().out.startswith("FAIL")


def test_cell_summary(capsys):
    assert main(["cell", "--lattice", "weight", "--summary"]) == 0
    assert "150" in capsys.readouterr().out
    assert main(["cell", "--lattice", "root"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 30


@pytest.mark.parametrize("lattice,n", [("root", 10), ("weight", 20)])
def test_decagon_outputs(tmp_path, capsys, lattice, n):
    svg, js = tmp_path / "d.svg", tmp_path / "d.json"
    assert main(["decagon", "--lattice", lattice, "--svg", str(svg), "--json", str(js), "--scale", "50"]) == 0
    assert _lines(capsys)["tiles"] == str(n)
    assert svg.read_bytes().count(b"<polygon") == n
    doc = json.loads(js.read_text())
    assert set(doc) == {"schema", "scale", "tiles", "meta"}
    assert len(import_json(doc)) == n


def test_tile_recipe(capsys):
    assert main(["tile", "--recipe", "fig5"]) == 0
    out = _lines(capsys)
    assert out["tiles"] == "35" and out["conflicts"] == "0"


@pytest.mark.parametrize("spelling", [["--center", "-1,1,-1,1"], ["--center=-1,1,-1,1"]])
def test_tile_center(capsys, spelling):
    assert main(["tile", *spelling, "--radius", "2", "--rounds", "2"]) == 0
    out = _lines(capsys)
    assert int(out["tiles"]) >= 10
    assert out["recipe"] == "center"


@pytest.mark.parametrize("name", MATRIX_NAMES)
def test_matrices(capsys, name):
    assert main(["matrices", "--element", name]) == 0
    out = capsys.readouterr().out
    assert out.count("full[") == 5


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["cell"],
    ["cell", "--lattice", "hex"],
    ["tile"],
    ["tile", "--recipe", "fig4", "--center", "0,0,0,0"],
    ["tile", "--recipe", "fig10"],
    ["tile", "--center", "1,2,3"],
    ["tile", "--recipe", "fig6", "--radius", "-1"],
    ["tile", "--recipe", "fig6", "--rounds", "-1"],
    ["decagon", "--lattice", "root", "--scale", "0"],
    ["matrices", "--element", "Q"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_console_module():
    res = subprocess.run([sys.executable, "-m", "pentatile.cli", "matrices", "--element", "C1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("element\tC1")
