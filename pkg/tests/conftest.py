import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from approxdim.corpus import corpus_algebra  # noqa: E402


@pytest.fixture(scope="session")
def a3():
    return corpus_algebra("a3")


@pytest.fixture(scope="session")
def nak33():
    return corpus_algebra("nak33")


@pytest.fixture(scope="session")
def kx2():
    return corpus_algebra("kx2")


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
