from random import Random

import pytest

from helpers import ACCEPTANCE_LINES, all_builtins


@pytest.fixture
def rng():
    return Random(20261018)


@pytest.fixture(scope="session")
def builtins():
    return all_builtins()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
