import pytest

from scl.cayley import DistanceOracle
from scl.group import STD, TWISTED

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def std_oracle():
    return DistanceOracle(STD, radius_cap=8)


@pytest.fixture(scope="session")
def twisted_oracle():
    return DistanceOracle(TWISTED, radius_cap=8)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
