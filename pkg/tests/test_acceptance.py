"""Every acceptance criterion at full level, one PASS/FAIL line each."""
import pytest

from scl.acceptance import CRITERIA, Settings, run_criterion

from .conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number:02d}")
def test_criterion(criterion):
    outcome = run_criterion(criterion, Settings(level="full"))
    line = outcome.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert outcome.passed, line
    assert outcome.in_budget, line
