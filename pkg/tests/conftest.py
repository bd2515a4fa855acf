import pytest

from xipos.zero_catalog import fixture_path, load_zero_table


@pytest.fixture(scope="session")
def table100():
    return load_zero_table(fixture_path("zeros100.txt"))


@pytest.fixture(scope="session")
def table1000():
    return load_zero_table(fixture_path("zeros1000.txt"))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
