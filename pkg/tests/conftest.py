"""Shared test plumbing: the acceptance-criteria scoreboard.

Acceptance tests record one entry per criterion; the terminal summary prints
a single pass/fail line for each so the final report reads as a checklist.
"""

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def record_acceptance(num: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((num, title, bool(ok), detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {num:2d}: {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
