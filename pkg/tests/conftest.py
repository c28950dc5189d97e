"""Shared test configuration: the acceptance-criteria summary printer."""

import pytest

# Populated by tests/test_acceptance.py: criterion number -> (passed, text).
ACCEPTANCE_RESULTS: dict = {}


@pytest.fixture(scope="session")
def acceptance_results():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, text = ACCEPTANCE_RESULTS[number]
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {word} -- {text}")
