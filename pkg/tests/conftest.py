"""Shared test plumbing: surface acceptance criterion lines after the run.

Capture swallows stdout of passing tests, so the acceptance battery
stashes its one-line verdicts here and a terminal summary hook prints
them once capture is released.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
