from fractions import Fraction

import pytest

from currentkm.classify import psi_validate
from currentkm.polyring import poly_parse
from currentkm.zerodim import Ideal

_criteria = {}


def make_spec(gcm, ring, gens, psi, hpp=None):
    """psi: {(coroot, "monomial"): value}; coroots are 0-based."""
    ring = tuple(ring)
    ideal = Ideal(ring, [poly_parse(g, ring) for g in gens])
    return psi_validate(gcm, ideal, {k: Fraction(v) for k, v in psi.items()}, hpp)


@pytest.fixture
def spec():
    return make_spec


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    n, text = marker.args
    _, ok, spent = _criteria.get(n, (text, True, 0.0))
    _criteria[n] = (text, ok and report.passed, spent + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        text, passed, duration = _criteria[n]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {n}: {text} ({duration:.1f}s)")
