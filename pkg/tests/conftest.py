"""Collects the acceptance-criterion results and prints one line per
criterion in pytest's terminal summary, so the lines survive output capture.
"""

import re

_pass_lines: dict[int, str] = {}

_CRITERION = re.compile(r"::test_criterion_(\d+)")


def record_acceptance(n: int, message: str) -> None:
    _pass_lines[n] = f"ACCEPTANCE {n}: PASS - {message}"


def _failed_criteria(terminalreporter) -> dict[int, str]:
    lines: dict[int, str] = {}
    for key in ("failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m is None:
                continue
            n = int(m.group(1))
            lines[n] = f"ACCEPTANCE {n}: FAIL - {rep.nodeid.rsplit('::', 1)[-1]}"
    return lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    fail_lines = _failed_criteria(terminalreporter)
    seen = set(_pass_lines) | set(fail_lines)
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(seen):
        # a criterion that failed never reached its record_acceptance call
        terminalreporter.write_line(fail_lines.get(n, _pass_lines.get(n, "")))
