"""Acceptance gate: one PASS/FAIL line per criterion.

All comparisons are exact (integer dimensions, Fraction slopes, polynomial
identities over F_p). Runtime budgets in seconds: criterion 1 < 60,
criterion 4 < 120, criterion 12 < 600.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
import pytest

from drinfeld_obstruction.acceptance import BUDGETS, CRITERIA, run_criterion


def test_budgets_are_pinned():
    assert BUDGETS == {1: 60.0, 4: 120.0, 12: 600.0}
    assert [n for n, _, _ in CRITERIA] == list(range(1, 15))


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.measured
