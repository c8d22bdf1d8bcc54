import pytest

from effradius.expr import parse
from effradius.gallery import MIXED, NORMAL_PDF, RATIONAL, SINE
from effradius.expansion import taylor

ACCEPTANCE_LINES: list[str] = []


def _case(case):
    f = parse(case.expr)
    return f, taylor(f, case.center, case.degree)


@pytest.fixture(scope="session")
def sine():
    return _case(SINE)


@pytest.fixture(scope="session")
def pdf():
    return _case(NORMAL_PDF)


@pytest.fixture(scope="session")
def mixed():
    return _case(MIXED)


@pytest.fixture(scope="session")
def rational():
    return _case(RATIONAL)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
