import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Print one PASS/FAIL line and keep it for the end-of-run summary."""

    def _report(name, passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip()
        print(line)
        ACCEPTANCE_LINES.append(line)
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
