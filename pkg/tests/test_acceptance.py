"""Acceptance suite: one line per criterion, PASS or FAIL, then a hard assert."""

import pytest

from hypersum.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [number for number, _title, _fn in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        status = "PASS" if result.passed else "FAIL"
        print(f"\n[acceptance] {status} criterion {result.number}: {result.title} ({result.seconds:.1f}s) {result.detail}")
    assert result.passed, result.detail
