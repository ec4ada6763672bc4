from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lveds.geom import build_unit_disk_graph

settings.register_profile(
    "default", max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# filled by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def udg(points, radius=1.0):
    return build_unit_disk_graph(points, radius)


NAMED = {
    "K2": [(0, 0), (1, 0)],
    "P3": [(0, 0), (1, 0), (2, 0)],
    "C4": [(0, 0), (1, 0), (1, 1), (0, 1)],
    "K1,3": [(0, 0), (1, 0), (-1, 0), (0, 1)],
    "K4": [(0, 0), (0.5, 0), (0.5, 0.5), (0, 0.5)],
    "K3": [(0, 0), (0.5, 0), (0.25, 0.4)],
}


@pytest.fixture
def named():
    return {k: udg(v) for k, v in NAMED.items()}


def point_sets(min_size=0, max_size=14, side=3.0):
    coord = st.floats(0, side, allow_nan=False, allow_infinity=False)
    return st.lists(st.tuples(coord, coord), min_size=min_size, max_size=max_size)


def tenth_point_sets(min_size=0, max_size=14, span=30):
    """Points on the 0.1 grid, where distance-exactly-1 ties are common."""
    c = st.integers(0, span).map(lambda k: k / 10)
    return st.lists(st.tuples(c, c), min_size=min_size, max_size=max_size)
