from pathlib import Path

import pytest

from wheeler_ms import build_index, build_lcp_array, read_wdfa

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def sample19():
    return read_wdfa(DATA / "sample19.wdfa")


@pytest.fixture(scope="session")
def sample19_lcp(sample19):
    return build_lcp_array(sample19)


@pytest.fixture(scope="session")
def mississippi():
    return build_index("mississippi$")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
