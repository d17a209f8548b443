import json
import subprocess
import sys

import pytest

from liecs import catalog_names
from liecs.cli import main

RUN = [sys.executable, "-m", "liecs.cli"]


def run_cli(*args):
    return subprocess.run(RUN + list(args), capture_output=True, text=True)


# -- exit status contract -----------------------------------------------------


def test_validate_builtin_exits_zero():
    result = run_cli("-i", "kt4", "--cmd", "validate")
    assert result.returncode == 0, result.stderr
    doc = json.loads(result.stdout)
    assert doc["validation"]["ok"] is True


@pytest.mark.parametrize("name", sorted(catalog_names()))
def test_report_on_every_builtin(name):
    result = run_cli("-i", name, "--cmd", "report")
    assert result.returncode == 0, result.stderr
    doc = json.loads(result.stdout)
    assert doc["schema"] == "liecs.report/1"
    assert doc["source"] == name
    assert doc["ok"] is True
    assert doc["validation"]["ok"] is True
    if name == "nn3":
        assert "series" not in doc
    else:
        assert set(doc["series"]) >= {
            "classical_descending",
            "classical_ascending",
            "j_ascending",
            "j_descending",
            "p_chain",
            "j0",
            "route_agreement",
        }


def test_suite_on_ch6_reports_route_agreement():
    result = run_cli("-i", "ch6", "--cmd", "suite")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["series"]["route_agreement"] is True
    assert all(v["status"] != "fail" for v in doc["verdicts"])


def test_jacobi_violation_file_exits_one_and_names_triple(tmp_path):
    bad = {
        "dim": 4,
        "brackets": [
            {"i": 1, "j": 2, "out": {"3": "1"}},
            {"i": 1, "j": 3, "out": {"1": "1"}},
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    result = run_cli("-i", str(path), "--cmd", "report")
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert doc["ok"] is False
    assert any("(1, 2, 3)" in e for e in doc["errors"])


def test_usage_error_exits_two():
    result = run_cli("--cmd", "report")  # missing --input
    assert result.returncode == 2
    result = run_cli("-i", "kt4", "--cmd", "frobnicate")
    assert result.returncode == 2


def test_unknown_input_exits_one():
    result = run_cli("-i", "not_a_thing")
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert doc["ok"] is False


def test_series_without_structure_exits_one():
    result = run_cli("-i", "nn3", "--cmd", "series")
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert "complex structure" in doc["errors"][0]


# -- determinism --------------------------------------------------------------


def test_reports_are_byte_identical_across_runs():
    for args in (
        ["-i", "kt4", "--cmd", "report"],
        ["-i", "ch6", "--cmd", "suite", "--format", "markdown"],
        ["-i", "kt4", "--cmd", "search", "--seed", "5", "--restarts", "20"],
    ):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == second.returncode
        assert first.stdout == second.stdout


# -- files and formats ---------------------------------------------------------


def test_out_flag_writes_file(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("-i", "hh6", "--cmd", "report", "--out", str(out))
    assert result.returncode == 0
    assert result.stdout == ""
    doc = json.loads(out.read_text())
    assert doc["series"]["j0"] == 2


def test_file_input_round_trip(tmp_path):
    from liecs import builtin, serialize_algebra

    entry = builtin("ch6")
    path = tmp_path / "ch6.json"
    path.write_bytes(
        serialize_algebra(entry.algebra, entry.primary_structure, entry.primary_stratification)
    )
    result = run_cli("-i", str(path), "--cmd", "report")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["series"]["j0"] == 2
    assert doc["classification"]["case"] == "k_full"


def test_markdown_format():
    result = run_cli("-i", "kt4", "--cmd", "report", "--format", "markdown")
    assert result.returncode == 0
    assert "# liecs report: kt4" in result.stdout
    assert "### p_j" in result.stdout


def test_search_command_reports_matrix():
    result = run_cli("-i", "a4", "--cmd", "search", "--seed", "0", "--restarts", "10")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["found"] is True
    assert doc["verified_integrable"] is True
    assert len(doc["matrix"]) == 4


def test_search_on_odd_dimension_exits_one():
    result = run_cli("-i", "nn3", "--cmd", "search")
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert doc["found"] is False


def test_search_knob_flags_are_accepted():
    result = run_cli(
        "-i", "kt4", "--cmd", "search",
        "--seed", "3", "--restarts", "5",
        "--threshold", "1e-8", "--den-cap", "1000",
    )
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["found"] is True and doc["restarts"] == 5


def test_search_markdown_format():
    result = run_cli(
        "-i", "a4", "--cmd", "search", "--seed", "0", "--restarts", "5",
        "--format", "markdown",
    )
    assert result.returncode == 0
    assert "# liecs search: a4" in result.stdout
    assert "- found: True" in result.stdout


def test_main_callable_in_process(capsys):
    status = main(["-i", "a4", "--cmd", "validate"])
    assert status == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["validation"]["ok"] is True
