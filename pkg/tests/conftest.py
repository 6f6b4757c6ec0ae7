import numpy as np
import pytest

from terncode.code import make_code, tetracode

_criteria: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, args in getattr(report, "criterion_marks", []):
        num, text = args
        _criteria.setdefault(num, [text, True])
        if not report.passed:
            _criteria[num][1] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criterion_marks = [(m.name, m.args) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, ok = _criteria[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture
def tetra():
    return tetracode()


@pytest.fixture
def line3():
    return make_code([[1, 1, 1]])


@pytest.fixture(scope="session")
def classifier():
    from terncode.classify import Classifier
    return Classifier()
