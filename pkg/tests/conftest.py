from __future__ import annotations

import pytest

_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title, limit): an acceptance criterion with a time limit in s")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    n, title, limit = mark.args
    verdict = "PASS" if rep.passed else "FAIL"
    bound = f", limit {limit} s" if limit else ""
    line = f"criterion {n} ({title}): {verdict} in {rep.duration:.2f} s{bound}"
    _LINES.append(line)
    print("\n" + line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
