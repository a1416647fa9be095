import pytest

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed at session end."""
    name = request.node.name

    def record(label):
        ACCEPTANCE_RESULTS[name] = label
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.name in ACCEPTANCE_RESULTS:
        label = ACCEPTANCE_RESULTS[item.name]
        ACCEPTANCE_RESULTS[item.name] = (label, rep.passed)


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in ACCEPTANCE_RESULTS.values() if isinstance(v, tuple)]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in rows:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
