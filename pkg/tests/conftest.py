"""Shared fixtures plus the acceptance summary printer.

Acceptance tests record one line per criterion in ``CRITERION_LINES``; the
terminal summary hook prints them after the run so the pass/fail status of
every criterion is visible even without ``-s``.
"""

CRITERION_LINES: list[str] = []


def record(number: int, title: str, ok: bool) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
    CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERION_LINES):
            terminalreporter.write_line(line)
