import pytest

from artemus.datasets import load_bundled

#: Verdict lines recorded by the acceptance gate, printed after the run
#: (passed tests' stdout is captured, a summary section is not).
ACCEPTANCE_VERDICTS: list[str] = []


@pytest.fixture(scope="session")
def housing():
    return load_bundled("housing")


@pytest.fixture(scope="session")
def education():
    return load_bundled("education")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)
