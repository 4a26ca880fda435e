"""Acceptance criteria 1-9 at their stated tolerances.

Each test prints one ``[PASS]`` or ``[FAIL]`` line (bypassing output
capture so it shows in a normal run) and then asserts the outcome.
"""

import pytest

from convextest.acceptance import CHECKS, run_check


@pytest.mark.parametrize("number", sorted(CHECKS), ids=lambda n: f"criterion{n}")
def test_criterion(number, capsys):
    result = run_check(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
