import json
import subprocess
import sys

import pytest

from affine_springer.affine_weyl import AffinePermutation
from affine_springer.cli import main
from affine_springer.constructions import one_minus_tinv
from affine_springer.laurent import LaurentMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tableau_worked_example(capsys):
    code, out, _ = run(capsys, "tableau", "-n", "17", "-d", "1,5,9,11", "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert data["nu"] == [5, 4, 3, 3, 1, 1]
    assert data["red_closed_form_mismatches"] == []


def test_tableau_small(capsys):
    code, out, _ = run(capsys, "tableau", "-n", "5", "-d", "3", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["lambda"] == [3, 2] and data["nu"] == [2, 2, 1]
    code, out, _ = run(capsys, "tableau", "-n", "2", "-d", "1")
    assert code == 0 and "lambda = (1, 1)" in out


@pytest.mark.parametrize("argv", [["tableau", "-n", "3", "-d", "4"], ["tableau", "-n", "3", "-d", "x"], ["kappa"], ["bogus"]])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_kappa(capsys):
    code, out, _ = run(capsys, "kappa", "-n", "17", "-d", "1,5,9,11", "--output", "json")
    data = json.loads(out)
    assert code == 0
    assert data["lengths"]["kappa"] == 272 and data["g_stable"] and not data["is_compactification"]
    code, out, _ = run(capsys, "kappa", "-n", "4", "-d", "2", "--output", "json")
    assert code == 0 and json.loads(out)["is_compactification"]
    code, out, _ = run(capsys, "kappa", "-n", "3", "-d", "1,2")
    assert code == 0 and "kappa  [-5, 6, 5]" in out and "kappa=7" in out


def test_kappa_reports_failing_check(capsys, monkeypatch):
    import affine_springer.constructions as c

    monkeypatch.setattr(c, "kappa_length_formula", lambda tab: -1)
    code, _, err = run(capsys, "kappa", "-n", "3", "-d", "1,2")
    assert code == 1 and "kappa_length_formula" in err


def test_cell(capsys, tmp_path):
    Z = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    text_file = tmp_path / "z.txt"
    text_file.write_text(one_minus_tinv(Z).to_text())
    json_file = tmp_path / "z.json"
    json_file.write_text(one_minus_tinv(Z).to_json())
    eye = tmp_path / "eye.json"
    eye.write_text(LaurentMatrix.identity(3).to_json())

    code, out, _ = run(capsys, "cell", str(eye), "--output", "json")
    assert code == 0 and json.loads(out)["cell"]["window"] == [1, 2, 3]

    for path in (text_file, json_file):
        code, out, _ = run(capsys, "cell", str(path), "--mod", "none", "--output", "json")
        assert code == 0
        assert AffinePermutation.from_window(json.loads(out)["cell"]["window"]).entries() == [
            (1, 2, -1),
            (2, 3, -1),
            (3, 1, 2),
        ]

    code, out, _ = run(capsys, "cell", str(text_file), "--mod", "S0", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["jordan_type"] == [3] and data["tau_q"]["window"] == [-5, 5, 6]
    assert data["below_tau_q"] is True

    code, out, _ = run(capsys, "cell", str(text_file), "--mod", "SP", "-d", "1")
    assert code == 0 and "mod S_P" in out


def test_cell_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 ; x\n0 ; 1\n")
    assert run(capsys, "cell", str(bad))[0] == 2
    assert run(capsys, "cell", str(tmp_path / "missing.txt"))[0] == 2
    singular = tmp_path / "sing.txt"
    singular.write_text("1 ; 1\n1 ; 1\n")
    assert run(capsys, "cell", str(singular))[0] == 3
    notunit = tmp_path / "nu.txt"
    notunit.write_text("1 + t ; 0\n0 ; 1\n")
    assert run(capsys, "cell", str(notunit))[0] == 3


def test_check_all_small(capsys):
    code, out, _ = run(capsys, "check-all", "--max-n", "2", "--trials", "2", "--output", "json")
    data = json.loads(out)
    assert code == 0
    assert [(r["n"], r["d"]) for r in data["results"]] == [(2, []), (2, [1])]
    assert data["summary"] == {"PASS": 2, "FAIL": 0, "SKIPPED": 0}


def test_check_all_budget_and_determinism(capsys):
    argv = ["check-all", "--max-n", "4", "--trials", "3", "--seed", "7", "--output", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    code, out, _ = run(capsys, *argv, "--term-budget", "20")
    data = json.loads(out)
    assert code == 0 and data["summary"]["SKIPPED"] > 0


def test_env_overrides(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("AFFINE_SPRINGER_SEED", "5")
    monkeypatch.setenv("AFFINE_SPRINGER_OUTPUT_DIR", str(tmp_path / "out"))
    code, out, _ = run(capsys, "check-all", "--max-n", "2", "--trials", "1", "--output", "json")
    assert code == 0 and json.loads(out)["seed"] == 5
    assert json.loads((tmp_path / "out" / "check-all.json").read_text()) == json.loads(out)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "affine_springer", "kappa", "-n", "2", "-d", "1", "--output", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kappa"]["window"] == [-1, 4]
