import pytest

from liemult import build_root_system, LieType

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.fixture(params=["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"])
def small_rs(request):
    return build_root_system(LieType.parse(request.param))


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    n, title = crit
    entry = _criteria.setdefault(n, {"title": title, "passed": 0, "failed": []})
    if report.failed:
        entry["failed"].append(report.nodeid.split("::")[-1])
    elif report.when == "call":
        entry["passed"] += 1


@pytest.fixture(autouse=True)
def _tag_criterion(request):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        request.node.user_properties.append(("criterion", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        status = "FAIL" if e["failed"] else "PASS"
        line = f"criterion {n}: {status}  {e['title']}"
        if e["failed"]:
            line += f"  (failing: {', '.join(e['failed'])})"
        terminalreporter.write_line(line)
