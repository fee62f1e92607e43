"""Shared fixtures and the acceptance summary hook.

The degree-5/6 exhaustive searches are the slowest steps in the suite, so
they run once per session and every module that needs a SearchReport shares
the result. Acceptance checks register one-line verdicts in ACCEPTANCE_LINES
and pytest's terminal summary prints them at the end of the run.
"""
import time

import pytest

from minklat.search import enumerate_m_lt_one

ACCEPTANCE_LINES = {}


def record_acceptance(key: str, line: str):
    ACCEPTANCE_LINES[key] = line


@pytest.fixture(scope="session")
def search_report_3():
    return enumerate_m_lt_one(3)


@pytest.fixture(scope="session")
def search_report_4():
    return enumerate_m_lt_one(4)


@pytest.fixture(scope="session")
def search_report_5():
    return enumerate_m_lt_one(5)


@pytest.fixture(scope="session")
def search_report_6():
    return enumerate_m_lt_one(6, threads=2)


@pytest.fixture(scope="session")
def timed_search_34():
    t0 = time.time()
    r3 = enumerate_m_lt_one(3)
    r4 = enumerate_m_lt_one(4)
    return r3, r4, time.time() - t0


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
