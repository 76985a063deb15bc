import pytest

_outcomes = {}
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    _titles[number] = title
    ok = report.passed or report.skipped
    _outcomes.setdefault(number, []).append((item.name, ok))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        results = _outcomes[number]
        ok = all(passed for _, passed in results)
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {_titles[number]}"
        failed = [name for name, passed in results if not passed]
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)
