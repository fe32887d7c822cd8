import subprocess
import sys
from pathlib import Path

import pytest

from lbk.cli import main


@pytest.fixture()
def tripod_model(tmp_path):
    path = tmp_path / "tripod.lbm"
    assert main(["fixture", "tree", "--ends", "3", "--lambda", "1", "-o", str(path)]) == 0
    return path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_fixture_then_validate(tripod_model, capsys):
    code, out = run(capsys, "validate", str(tripod_model))
    assert code == 0
    assert out.strip().endswith("RESULT valid")


def test_fixture_lambda_two(tmp_path, capsys):
    path = tmp_path / "tripod2.lbm"
    assert main(["fixture", "tree", "--ends", "3", "--lambda", "2", "-o", str(path)]) == 0
    assert "lambda 2" in path.read_text()
    code, _ = run(capsys, "validate", str(path))
    assert code == 0


def test_axioms_subset_exit_zero(tripod_model, capsys):
    code, out = run(capsys, "axioms", str(tripod_model), "--only", "A6,EC,SE")
    assert code == 0
    for name in ("A6", "EC", "SE"):
        assert f"SUMMARY axiom={name}" in out
        assert f"verdict=pass" in out
    assert out.count("SUMMARY") == 3


def test_axioms_full_run_emits_equivalence(tripod_model, capsys):
    code, out = run(capsys, "axioms", str(tripod_model), "--samples", "40")
    assert code == 0
    assert "EQUIVALENCE precondition=ok" in out
    assert "ALARM" not in out


def test_axioms_structural_only(tripod_model, capsys):
    code, out = run(capsys, "axioms", str(tripod_model), "--only", "A1,A2")
    assert code == 0
    assert "SUMMARY axiom=A1" in out and "SUMMARY axiom=A2" in out
    assert "EQUIVALENCE" not in out


def test_axioms_unknown_name_exit_two(tripod_model, capsys):
    assert main(["axioms", str(tripod_model), "--only", "A9"]) == 2


def test_axioms_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.lbm"
    main(["fixture", "broken-pair", "-o", str(path)])
    code, out = run(capsys, "axioms", str(path), "--only", "EC")
    assert code == 1
    assert "verdict=fail" in out


def test_distance_example(tripod_model, capsys):
    code, out = run(capsys, "distance", str(tripod_model), "chart:23 (1)", "chart:23 (-2)")
    assert code == 0
    assert out.strip() == "6"


def test_distance_across_charts(tripod_model, capsys):
    code, out = run(capsys, "distance", str(tripod_model), "chart:12 (-1)", "chart:13 (-2)")
    assert code == 0
    assert out.strip() == "6"


def test_retract_folds_ray(tripod_model, capsys):
    code, out = run(
        capsys,
        "retract",
        str(tripod_model),
        "--chart",
        "12",
        "--germ",
        "chart:12 (0)",
        "chart:23 (-2)",
        "chart:12 (5)",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "chart:12 (-2)"
    assert lines[1] == "chart:12 (5)"


def test_infinity_counts(tripod_model, capsys):
    code, out = run(capsys, "infinity", str(tripod_model))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "chambers 3"
    assert lines[1] == "apartments 3"


def test_gallery(tripod_model, capsys):
    code, out = run(capsys, "gallery", str(tripod_model), "chart:12 (0)", "chart:12 (0) ; 1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "types 1"
    assert lines[2] == "length 1"


def test_malformed_model_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.lbm"
    path.write_text("lambda 1\nroots A1\ncharts 2\nglue 1 2 : zz a1 0 ; word ; t (0)\n")
    code = main(["validate", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "line 4" in err


def test_missing_file_exit_two(capsys):
    assert main(["validate", "/nonexistent/path.lbm"]) == 2


def test_deterministic_reports(tripod_model, capsys):
    _, first = run(capsys, "axioms", str(tripod_model), "--samples", "30", "--seed", "7")
    _, second = run(capsys, "axioms", str(tripod_model), "--samples", "30", "--seed", "7")
    assert first == second


def test_fixture_determinism_bytes(tmp_path):
    a = tmp_path / "a.lbm"
    b = tmp_path / "b.lbm"
    main(["fixture", "fan", "--leaves", "3", "--roots", "A2", "-o", str(a)])
    main(["fixture", "fan", "--leaves", "3", "--roots", "A2", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_module_entrypoint_runs():
    result = subprocess.run(
        [sys.executable, "-m", "lbk", "fixture", "tree", "--ends", "2"],
        capture_output=True,
        text=True,
        cwd=str(Path(__file__).resolve().parent.parent),
        env={"PYTHONPATH": str(Path(__file__).resolve().parent.parent / "src"), "PATH": "/usr/bin:/bin"},
    )
    assert result.returncode == 0
    assert "roots A1" in result.stdout
