import os
from collections import Counter

import pytest

from nearfactor.feasibility import check_condition
from nearfactor.model import LengthList, Realization

SLOW = os.environ.get("NEARFACTOR_SLOW") == "1"

# every factor built during the run; each must meet the divisor condition
PRODUCED: set = set()
_orig_init = Realization.__init__


def _recording_init(self, *args, **kwargs):
    _orig_init(self, *args, **kwargs)
    if self.factor.v > 1:
        PRODUCED.add(self.factor)


Realization.__init__ = _recording_init


def circular_lengths(f) -> LengthList:
    v, b = f.v, f.base
    return LengthList.of(min(abs(x - y), v - abs(x - y)) for x, y in ((x - b, y - b) for x, y in f.edges))


def produced_violations() -> list:
    return [f for f in PRODUCED if not check_condition(circular_lengths(f))]


def all_near_one_factors(v):
    """Naive generator of every near 1-factor of K_v as (edges, isolated)."""

    def matchings(verts):
        if not verts:
            yield []
            return
        a = verts[0]
        for k in range(1, len(verts)):
            rest = verts[1:k] + verts[k + 1:]
            for m in matchings(rest):
                yield [(a, verts[k])] + m

    for iso in range(v):
        verts = [x for x in range(v) if x != iso]
        for m in matchings(verts):
            yield m, iso


def brute_force_lists(v, linear=False):
    """All lists realized by some near 1-factor of K_v, keyed by sorted length tuple."""
    found = set()
    for edges, iso in all_near_one_factors(v):
        if linear:
            ls = [y - x for x, y in edges]
        else:
            ls = [min(y - x, v - (y - x)) for x, y in edges]
        found.add(tuple(sorted(ls)))
    return found


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config._criteria = Counter(), Counter()


def pytest_collection_modifyitems(config, items):
    # the global divisor-condition check needs every other test to have run
    last = [it for it in items if it.name == "test_all_produced_factors_meet_condition"]
    items[:] = [it for it in items if it not in last] + last
    if SLOW:
        return
    skip = pytest.mark.skip(reason="extended run; set NEARFACTOR_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.skipped:
        return
    passed, failed = item.config._criteria
    if rep.when == "call" and rep.passed:
        passed[mark.args[0]] += 1
    elif rep.failed:
        failed[mark.args[0]] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    passed, failed = config._criteria
    if not (passed or failed):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(set(passed) | set(failed)):
        status = "FAIL" if failed[n] else "PASS"
        terminalreporter.write_line(f"criterion {n}: {status} ({passed[n]} passed, {failed[n]} failed)")
    bad = produced_violations()
    terminalreporter.write_line(
        f"divisor condition over all {len(PRODUCED)} factors built in this run: "
        + ("PASS" if not bad else f"FAIL ({len(bad)} violations)")
    )


def pytest_sessionfinish(session, exitstatus):
    if produced_violations() and exitstatus == 0:
        session.exitstatus = 1
