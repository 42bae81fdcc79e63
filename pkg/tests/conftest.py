import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from coverideal import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    labels = [f"x{i}" for i in range(1, n + 1)]
    pairs = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(labels, chosen)


# filled by tests/test_acceptance.py, reported after the run
CRITERIA = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, title, seconds = CRITERIA[number]
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title} ({seconds:.1f}s)"
        )


@pytest.fixture
def c4():
    return Graph.from_edges(["x1", "x2", "x3", "x4"],
                            [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1")])
