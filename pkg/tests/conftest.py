import pytest

from lpmkit.transversal import lpm

ACCEPTANCE_LINES = []


@pytest.fixture
def ex1():
    return lpm("EENENN", "NNENEE")


@pytest.fixture
def record_criterion():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append((number, ok, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
