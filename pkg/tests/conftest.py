import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hcsemi import Semigroup, fixture, monogenic, s3_named  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ex33():
    return fixture("ex33_S")


@pytest.fixture(scope="session")
def s3():
    return s3_named()


@pytest.fixture(scope="session")
def c31():
    return monogenic(3, 1)


@pytest.fixture(scope="session")
def left_zero():
    return Semigroup(((0, 0), (1, 1)))


@pytest.fixture(scope="session")
def semilattice2():
    return Semigroup(((0, 1), (1, 1)))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: opt-in sweeps, enable with HCSEMI_SLOW=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HCSEMI_SLOW"):
        return
    skip = pytest.mark.skip(reason="set HCSEMI_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
