import os
import random
from fractions import Fraction

import pytest
from hypothesis import settings

from holorec.exactmath.poly import Poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "data")


def rand_poly(rng, deg, height=10):
    c = [Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(deg)]
    return Poly(c + [Fraction(rng.choice([-1, 1]) * rng.randint(1, height), rng.randint(1, height))])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def n():
    return Poly([0, 1])


# -- acceptance summary -------------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    entry = _criteria.setdefault(mark.args[0], {"ok": True, "failed": []})
    if not rep.passed:
        entry["ok"] = False
        entry["failed"].append(mark.args[1] if len(mark.args) > 1 else item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for k in sorted(_criteria):
        entry = _criteria[k]
        line = f"criterion {k:>2}: {'PASS' if entry['ok'] else 'FAIL'}"
        if entry["failed"]:
            line += "  (" + "; ".join(entry["failed"]) + ")"
        tr.write_line(line)
