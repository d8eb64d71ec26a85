import os
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from llgames.formula import random_formula

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def formulas(draw, depth=4, exponentials=True):
    """Atom-free formulas, drawn through a seeded generator so they shrink by seed."""
    seed = draw(st.integers(0, 2**32 - 1))
    return random_formula(random.Random(seed), depth, exponentials)


@pytest.fixture
def rng():
    return random.Random(1234)


# acceptance lines, one per criterion, echoed after the run
ACCEPTANCE = {}


@pytest.fixture
def criterion():
    def record(n, ok, detail=""):
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE[n] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
