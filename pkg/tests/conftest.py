import random

import pytest
from hypothesis import settings

DEFAULT_SEED = 20240611

settings.register_profile("sqsym", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("sqsym")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized tests")


def pytest_report_header(config):
    return f"sqsym test seed: {config.getoption('--seed')} (replay with --seed)"


@pytest.fixture
def seed(request):
    value = request.config.getoption("--seed")
    print(f"seed={value}")
    return value


@pytest.fixture
def rng(seed):
    return random.Random(seed)


# --------------------------------------------------------- acceptance summary

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label, title): an acceptance criterion")


def pytest_runtest_logreport(report):
    label = getattr(report, "acceptance", None)
    if label is None:
        return
    ok = _ACCEPTANCE.get(label, (True, ""))[0]
    if report.when == "call" or report.failed:
        _ACCEPTANCE[label] = (ok and report.passed, report.title, report.duration)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        rep = outcome.get_result()
        rep.acceptance, rep.title = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s[1:])):
        ok, title, secs = _ACCEPTANCE[label]
        terminalreporter.write_line(f"{label} {'PASS' if ok else 'FAIL'}  {title} ({secs:.1f}s)")
