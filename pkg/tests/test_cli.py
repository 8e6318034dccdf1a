"""Command-line entry point: subcommands, exit codes, output placement."""

import json
import subprocess
import sys

import pytest

from qreduce.cli import main
from qreduce.scenarios import SCENARIO_NAMES


@pytest.fixture
def compare_config_file(tmp_path):
    cfg = {
        "scenario": "ComparePostulates",
        "seed": 1,
        "params": {"a2": 0.5, "z_values": [0.05], "lambdas": [1.0]},
        "outputs": {"csv": "cp.csv", "json": "cp.json"},
    }
    path = tmp_path / "compare.json"
    path.write_text(json.dumps(cfg))
    return path


def test_list_scenarios(capsys):
    assert main(["list-scenarios"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == list(SCENARIO_NAMES)


def test_validate_accepts_good_config(capsys, compare_config_file):
    assert main(["validate", str(compare_config_file)]) == 0
    assert "OK" in capsys.readouterr().out


def test_validate_rejects_bad_config(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"scenario": "Nope"}))
    assert main(["validate", str(bad)]) == 2
    assert "config error" in capsys.readouterr().err


def test_missing_config_file_is_a_config_error(capsys, tmp_path):
    assert main(["run", str(tmp_path / "ghost.json")]) == 2
    assert "config error" in capsys.readouterr().err


def test_run_writes_outputs_and_prints_summary(capsys, tmp_path, compare_config_file):
    out_dir = tmp_path / "results"
    assert main(["run", str(compare_config_file), "--out-dir", str(out_dir)]) == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed["scenario"] == "ComparePostulates"
    assert (out_dir / "cp.csv").exists()
    on_disk = json.loads((out_dir / "cp.json").read_text())
    assert on_disk == printed


def test_run_seed_override_changes_payload(capsys, tmp_path):
    cfg = {
        "scenario": "DecoherenceSweep",
        "seed": 7,
        "params": {"a": 0.6, "b": 0.8, "n_values": [2], "trials": 5, "t": 1.0},
        "outputs": {"csv": "d.csv", "json": "d.json"},
    }
    path = tmp_path / "deco.json"
    path.write_text(json.dumps(cfg))
    assert main(["run", str(path), "--out-dir", str(tmp_path / "a")]) == 0
    first = json.loads(capsys.readouterr().out)
    assert main(
        ["run", str(path), "--out-dir", str(tmp_path / "b"), "--seed", "8"]
    ) == 0
    second = json.loads(capsys.readouterr().out)
    assert first["seed"] == 7 and second["seed"] == 8
    assert first["results"]["rows"] != second["results"]["rows"]


def test_cap_exceeded_exit_code(capsys, tmp_path):
    cfg = {
        "scenario": "WindowScan",
        "seed": 3,
        "params": {"a2": 0.5, "z_values": [0.01], "delta_theta": 1e-7},
        "outputs": {"csv": "w.csv", "json": "w.json"},
    }
    path = tmp_path / "window.json"
    path.write_text(json.dumps(cfg))
    assert main(["run", str(path), "--out-dir", str(tmp_path)]) == 4
    assert "cap exceeded" in capsys.readouterr().err


def test_console_script_runs_in_subprocess(tmp_path, compare_config_file):
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "qreduce.cli",
            "run",
            str(compare_config_file),
            "--out-dir",
            str(tmp_path / "sub"),
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["results"]["rows"][0]["z"] == 0.05
