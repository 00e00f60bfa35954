"""Emit the acceptance-criterion pass/fail lines in the terminal summary.

Pytest captures test stdout at file-descriptor level, so the lines printed by
tests/test_acceptance.py would otherwise be invisible on passing runs.
"""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod is not None else None
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
