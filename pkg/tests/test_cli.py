import json
import subprocess
import sys

import pytest

from ehrhart_lf.cli import main


def write(tmp_path, name, vertices, dim=None):
    path = tmp_path / name
    path.write_text(json.dumps({"name": name, "dim": dim or len(vertices[0]), "vertices": vertices}))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "p1": write(tmp_path, "p1.json", [["0", "0", "0"], ["4", "0", "0"], ["3", "6", "0"], ["2", "2", "10"]]),
        "good": write(tmp_path, "good.json", [["0", "0"], ["1", "1"], ["2", "0"]]),
        "bad": write(tmp_path, "bad.json", [["0", "0"], ["2", "0"], ["2", "1"]]),
        "malformed": write(tmp_path, "malformed.json", [["0", "0"], ["2", "0"], ["3//4", "1"]]),
        "square": write(tmp_path, "square.json", [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]),
        "segment": write(tmp_path, "segment.json", [["0"], ["5"]]),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_check_lattice_face(capsys, files):
    code, rep = run(capsys, "check", files["good"])
    assert code == 0 and rep["status"] == "ok"
    assert rep["payload"]["lattice_face"] is True
    assert rep["schema"] == "ehrhart-lf/1"


def test_check_reports_witness(capsys, files):
    code, rep = run(capsys, "check", files["bad"])
    assert code == 0
    w = rep["payload"]["lattice_face_witness"]
    assert rep["payload"]["lattice_face"] is False
    assert w["subset"] == [0, 2] and w["points"] == [["0", "0"], ["2", "1"]]


def test_malformed_rational(capsys, files):
    code, rep = run(capsys, "check", files["malformed"])
    assert code == 2 and rep["status"] == "error"
    assert rep["payload"]["location"] == "vertices[2][0]"


def test_ehrhart_both(capsys, files):
    code, rep = run(capsys, "ehrhart", files["p1"])
    assert code == 0
    pay = rep["payload"]
    assert pay["formula"]["coefficients"] == ["1", "4", "12", "40"]
    assert pay["interpolation"]["coefficients"] == ["1", "4", "12", "40"]
    assert pay["agree"] is True


def test_ehrhart_interp_on_non_lattice_face(capsys, files):
    code, rep = run(capsys, "ehrhart", "--method", "interp", files["square"])
    assert code == 0
    assert rep["payload"]["interpolation"]["coefficients"] == ["1", "2", "1"]
    assert "formula" not in rep["payload"]


def test_ehrhart_formula_violation(capsys, files):
    code, rep = run(capsys, "ehrhart", "--method", "formula", files["bad"])
    assert code == 1 and rep["status"] == "violation"
    assert rep["payload"]["witness"]["subset"] == [0, 2]


def test_decompose_example(capsys, files):
    code, rep = run(capsys, "decompose", files["p1"])
    assert code == 0
    cells = rep["payload"]["cells"]
    assert [c["sign"] for c in cells] == [1, 1, 1, 1, 1, -1]
    first = cells[0]
    assert first["sigma"] == "123" and first["count"] == 20
    assert ["2", "0", "0"] in first["chain"] and ["2", "2", "0"] in first["chain"]
    assert rep["payload"]["totals"] == {"cells": 6, "signed_count": 40, "volume": "40"}


def test_decompose_segment(capsys, files):
    code, rep = run(capsys, "decompose", files["segment"])
    assert code == 0
    assert [c["sign"] for c in rep["payload"]["cells"]] == [1]


def test_decompose_rejects_non_simplex(capsys, files):
    code, rep = run(capsys, "decompose", files["square"])
    assert code == 1 and rep["status"] == "error"
    assert "triangulate" in rep["payload"]["message"]


def test_verify_generated(capsys):
    code, rep = run(capsys, "verify", "--gen", "3", "42", "20", "--suite", "all")
    assert code == 0
    assert rep["payload"]["instances"] == 20 and rep["payload"]["violations"] == 0


@pytest.mark.parametrize("suite", ["main2", "reciprocity", "fdecomp", "gsigma", "det2", "zero5"])
def test_verify_example_suites(capsys, files, suite):
    code, rep = run(capsys, "verify", files["p1"], "--suite", suite)
    assert code == 0
    res = rep["payload"]["results"][0]["suites"][suite]
    assert res["ok"]
    if suite == "main2":
        assert res["count_omega"] == 40 and res["volume"] == "40"


def test_verify_non_simplex_is_triangulated(capsys, tmp_path):
    # a lattice-face quadrilateral: every pairwise slope is an integer
    path = write(tmp_path, "quad.json", [["0", "0"], ["1", "1"], ["2", "0"], ["3", "-3"]])
    code, rep = run(capsys, "verify", path, "--suite", "main2")
    res = rep["payload"]["results"][0]["suites"]["main2"]
    assert code == 0 and res["ok"] and res["simplices"] == 2


def test_verify_flags_non_lattice_face(capsys, files):
    code, rep = run(capsys, "verify", files["bad"], "--suite", "main2")
    assert code == 1 and rep["status"] == "violation"


def test_verify_needs_one_source(capsys, files):
    code, rep = run(capsys, "verify", files["p1"], "--gen", "2", "0", "1")
    assert code == 2
    code, rep = run(capsys, "verify")
    assert code == 2


def test_bad_generator_dimension(capsys):
    code, rep = run(capsys, "verify", "--gen", "6", "0", "1")
    assert code == 2 and "generation failed" in rep["payload"]["message"]


def test_budget_exit_code(capsys, files):
    code, rep = run(capsys, "--budget", "10", "ehrhart", "--method", "interp", files["p1"])
    assert code == 3 and rep["payload"]["kind"] == "budget"


def test_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_reports_are_byte_identical(files):
    cmd = [sys.executable, "-m", "ehrhart_lf", "verify", "--gen", "2", "7", "3", "--suite", "all"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    again = subprocess.run([sys.executable, "-m", "ehrhart_lf", "decompose", files["p1"]], capture_output=True)
    assert again.returncode == 0
    assert again.stdout == subprocess.run(
        [sys.executable, "-m", "ehrhart_lf", "decompose", files["p1"]], capture_output=True
    ).stdout
