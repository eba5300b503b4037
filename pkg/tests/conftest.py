import pytest

from q8nichols.groups import centralizer, conjugacy_classes, quaternion_group
from q8nichols.report import centralizer_irreps
from q8nichols.ydmod import induce_yd

_criteria: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key in getattr(report, "criteria", ()):
        _criteria.setdefault(key, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [str(m.args[0]) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        outcomes = _criteria[key]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status} ({outcomes.count('passed')}/{len(outcomes)} checks)")


@pytest.fixture(scope="session")
def Q8():
    return quaternion_group()


def _all_modules():
    G = quaternion_group()
    out = {}
    for cls in conjugacy_classes(G):
        g = cls.representative
        H = centralizer(G, g)
        for rep in centralizer_irreps(G, g, H, 4):
            out[(G.label(g), rep.label)] = induce_yd(G, g, rep)
    return out


@pytest.fixture(scope="session")
def q8_modules():
    """All 22 simple Yetter-Drinfeld modules over Q8, keyed by (class, irrep)."""
    return _all_modules()
