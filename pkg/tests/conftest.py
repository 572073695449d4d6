from functools import lru_cache
from itertools import product

import pytest

from dsgraph import SpaceParams, build_graph


@lru_cache(maxsize=None)
def graph(q, r, s):
    return build_graph(SpaceParams(q, r, s))


def acceptance_grid(max_order=1000):
    pts = []
    for q in (2, 3, 5):
        for r, s in product(range(1, 5), repeat=2):
            if r <= s and (q**r - 1) * (q**s - 1) <= max_order:
                pts.append((q, r, s))
    return pts


@pytest.fixture
def g222():
    return graph(2, 2, 2)


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
