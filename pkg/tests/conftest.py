import pytest

from extsplash.fields import make_field
from extsplash.splash import canonical_pair


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def gf4():
    return make_field(4)


@pytest.fixture(scope="session")
def pair2(gf2):
    return canonical_pair(gf2)


@pytest.fixture(scope="session")
def pair3(gf3):
    return canonical_pair(gf3)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
