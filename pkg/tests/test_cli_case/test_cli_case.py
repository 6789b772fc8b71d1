"""
Tests for the kernelsplit command line: JSON reports and exit codes.
"""

import json

import pytest

from main import run
from src.analysis.report import Report
from src.helpers.workbench_helper import assert_report_round_trip, assert_verdicts
from tests.test_cli_case.data import ERROR_CASES, TEST_CASES


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["name"])
def test_cli_reports(test_case, capsys, logger):
    exit_code = run(test_case["argv"])
    out = capsys.readouterr().out
    assert exit_code == test_case["exit_code"]
    report = Report.from_json(out)
    logger.info(f"{test_case['name']}: {report.verdicts}")
    assert report.command == test_case["argv"][1]
    assert_verdicts(report, test_case["verdicts"])
    assert_report_round_trip(report)


@pytest.mark.parametrize("test_case", ERROR_CASES, ids=lambda tc: tc["name"])
def test_cli_exit_codes(test_case, capsys):
    exit_code = run(test_case["argv"])
    err = capsys.readouterr().err
    assert exit_code == test_case["exit_code"]
    assert "Error" in err


def test_text_rendering(capsys):
    assert run(["lie", "A", "1", "7", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("== lie")
    assert "aut_split" in out
    assert "True" in out


def test_section_witness_in_cycle_notation(capsys):
    assert run(["--json", "lien", "--f", "A5", "--gamma", "C2", "--kappa", "1:s"]) == 0
    data = json.loads(capsys.readouterr().out)
    witness = data["witnesses"]["section"]
    assert len(witness) == 1
    assert witness[0].startswith("(")
    assert data["schema_version"] == 1


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        run([])
    assert excinfo.value.code == 2
