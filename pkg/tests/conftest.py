import pytest

_LINES: list = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line per acceptance check; printed again in the summary."""
    def emit(line: str) -> None:
        print(line)
        _LINES.append(line)
    return emit


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance")
        for line in _LINES:
            terminalreporter.write_line(line)
