import pytest

from takiff_lab import builders


@pytest.fixture(scope="session")
def sl2():
    return builders.classical("A", 1)


@pytest.fixture(scope="session")
def sl3():
    return builders.classical("A", 2)


@pytest.fixture(scope="session")
def sp4():
    return builders.classical("C", 2)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import report_lines

    lines = report_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
