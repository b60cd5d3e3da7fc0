import pytest

from cubedensity import kernels

BACKENDS = sorted(kernels.available_backends())


@pytest.fixture(params=BACKENDS)
def backend(request):
    return kernels.available_backends()[request.param]


_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = "; ".join(f"{k}={v}" for k, v in item.user_properties)
        _acceptance[number] = (rep.outcome, title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section(f"acceptance criteria (backend: {kernels.BACKEND})")
    for number in sorted(_acceptance):
        outcome, title, detail = _acceptance[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"AC{number:<2} {status}  {title}"
        tr.write_line(f"{line}  [{detail}]" if detail else line)
