"""Acceptance gate: ten criteria, one test and one pass/fail line each.

Criteria 1 through 9 run the library's oracle-agreement suites with their
time budgets; criterion 10 drives the command line for golden-output
stability and the aggregate check command.
"""

import json
import subprocess
import sys

import pytest

from infgon.acceptance import ALL_SUITES, run_suite

SUITES = dict(ALL_SUITES)

BUDGETS = {
    "crossing-ext-bridge": 30.0,
    "serre-duality": 30.0,
    "tower-colim-vs-wedge": 60.0,
    "inverse-tower-vs-wedge": 60.0,
    "prufer-prufer-tower": 60.0,
    "classification-fixtures": 5.0,
    "overarc-witnesses": 10.0,
    "graded-duality": 5.0,
    "shift-equivariance": 30.0,
}


def run_criterion(number, name):
    result = run_suite(name, SUITES[name])
    budget = BUDGETS[name]
    line = (
        f"{'PASS' if result.passed else 'FAIL'} criterion-{number} {name} "
        f"checked={result.checked} time={result.seconds:.2f}s "
        f"budget={budget:.0f}s"
    )
    print(line)
    assert result.passed, f"criterion-{number} {name}: {result.detail}"
    assert result.seconds < budget, (
        f"criterion-{number} {name} overran its budget: "
        f"{result.seconds:.2f}s >= {budget:.0f}s"
    )
    return result


def test_criterion_01_crossing_ext_bridge():
    run_criterion(1, "crossing-ext-bridge")


def test_criterion_02_serre_duality():
    run_criterion(2, "serre-duality")


def test_criterion_03_tower_colim_vs_wedge():
    run_criterion(3, "tower-colim-vs-wedge")


def test_criterion_04_inverse_tower_vs_wedge():
    run_criterion(4, "inverse-tower-vs-wedge")


def test_criterion_05_prufer_prufer_tower():
    run_criterion(5, "prufer-prufer-tower")


def test_criterion_06_classification_fixtures():
    run_criterion(6, "classification-fixtures")


def test_criterion_07_overarc_witnesses():
    run_criterion(7, "overarc-witnesses")


def test_criterion_08_graded_duality():
    run_criterion(8, "graded-duality")


def test_criterion_09_shift_equivariance():
    run_criterion(9, "shift-equivariance")


def test_criterion_10_cli_golden_and_check(tmp_path):
    from infgon.cli import main

    fan = tmp_path / "fan.json"
    fan.write_text(
        json.dumps(
            {"generators": [{"kind": "fan", "vertex": 0}], "infinite_arcs": [0]}
        )
    )

    def capture(argv):
        proc = subprocess.run(
            [sys.executable, "-m", "infgon.cli", *argv],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        return proc.stdout

    golden_commands = [
        ["classify", "--config", str(fan), "--json"],
        ["hom", "--from", "f:0:0", "--to", "p:0", "--json"],
        ["render", "--config", str(fan), "--window", "-5:5"],
    ]
    for argv in golden_commands:
        first = capture(argv)
        second = capture(argv)
        assert first == second, f"output drifted between runs: {argv}"

    rc = main(["check"])
    line = f"{'PASS' if rc == 0 else 'FAIL'} criterion-10 cli-golden-and-check"
    print(line)
    assert rc == 0
