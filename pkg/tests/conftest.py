"""Shared pytest hooks.

After the run, print the acceptance-criteria ledger collected by
tests/test_acceptance.py: one PASS/FAIL line per numbered criterion.
"""

from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None) if module else None
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        label, ok, detail = results[num]
        line = f"[{num:2d}] {label} ... {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
