"""Shared pytest plumbing.

The acceptance tests record one verdict line per criterion; printing
them from a terminal-summary hook keeps them visible even though
pytest captures test output.
"""

ACCEPTANCE_VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)
