import pytest
from hypothesis import settings

from ringgraph.corpus import DEFAULT_CORPUS, get_ring

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# corpus rings small enough for O(n^3) brute force in property tests
SMALL = [n for n in DEFAULT_CORPUS if get_ring(n).order <= 16]
NONCOMMUTATIVE = ["E4", "F4", "E9", "F9", "UT2Z2", "M2Z2", "Z2xE4", "E4xF4", "Z3xE4", "Z2xE9"]


@pytest.fixture(scope="session")
def E4():
    return get_ring("E4")


@pytest.fixture(scope="session")
def F4():
    return get_ring("F4")


@pytest.fixture(scope="session")
def E9():
    return get_ring("E9")


@pytest.fixture(scope="session")
def F9():
    return get_ring("F9")


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
