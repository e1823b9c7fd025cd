from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdsem.syntax import parse_diagram  # noqa: E402

DATA = Path(__file__).parent / "data"

ABC_SOURCE = (DATA / "ABC.cd").read_text()
CA_SOURCE = (DATA / "CA.cd").read_text()

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def abc():
    return parse_diagram(ABC_SOURCE)


@pytest.fixture(scope="session")
def ca():
    return parse_diagram(CA_SOURCE)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
