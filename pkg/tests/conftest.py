import pytest


@pytest.fixture
def catalan_head():
    # independent of the package: binomial formula C_j = binom(2j, j) / (j + 1)
    from math import comb

    return [comb(2 * j, j) // (j + 1) for j in range(13)]


_criteria: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _criteria[label] = "PASS" if report.passed else "FAIL"


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0].lstrip("AC"))):
        terminalreporter.write_line(f"[{_criteria[label]}] {label}")
