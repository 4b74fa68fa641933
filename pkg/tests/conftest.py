import pytest

from hypotoeplitz import parse_symbol

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def sym():
    return parse_symbol


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
