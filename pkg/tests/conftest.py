import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("eulerap", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("eulerap")


@pytest.fixture(autouse=True)
def _private_cache(tmp_path, monkeypatch):
    # never touch a real user cache from the test suite
    monkeypatch.setenv("EULERAP_CACHE", os.fspath(tmp_path / "gamma.jsonl"))


_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, written at the end of the run."""
    number = request.node.get_closest_marker("criterion").args[0]
    notes: list[str] = []
    yield notes
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    line = f"criterion {number:>2}: {status}" + (f"  ({'; '.join(notes)})" if notes else "")
    _ACCEPTANCE[number] = line
    print("\n" + line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
