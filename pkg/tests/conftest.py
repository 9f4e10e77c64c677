import pytest

_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        previous = _RESULTS.get(label, "PASS")
        _RESULTS[label] = "PASS" if previous == "PASS" and report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=_order):
        terminalreporter.write_line(f"{_RESULTS[label]}  {label}")


def _order(label: str):
    head, _, tail = label.partition(" ")
    return (int(head.rstrip("abcdefgh")), head, tail)
