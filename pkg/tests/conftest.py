import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import corpus  # noqa: E402
from quasicrypt.catalog import example_table  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def small_corpus():
    return corpus()


@pytest.fixture
def ex():
    return example_table


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
