import pytest

_ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance():
    """Record one criterion's outcome line for the end-of-run summary."""
    def record(number: int, ok: bool, text: str) -> None:
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {text}"
        _ACCEPTANCE[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])
