import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=200, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=2000, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import pytest

_ACCEPTANCE: dict[str, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if not item.name.startswith("test_ac") or report.when != "call":
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    key, _, title = doc.partition(" ")
    status = "PASS" if report.passed else "FAIL"
    reason = ""
    if report.failed:
        reason = str(call.excinfo.value).splitlines()[0] if call.excinfo else ""
    _ACCEPTANCE[key] = (status, title + (f"  [{reason}]" if reason else ""), report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k[2:])):
        status, title, duration = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{key} {status} ({duration:.2f} s) {title}")
