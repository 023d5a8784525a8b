import random

import pytest
from hypothesis import settings

settings.register_profile("ci", derandomize=True, max_examples=150)
settings.load_profile("ci")

# One line per acceptance criterion, echoed after the test summary so the
# verdicts survive output capturing.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(987654321)
