import random
from pathlib import Path

import pytest

from fanforge.corpus import corpus, random_reduction
from fanforge.graph import make_complete, make_hypercube, make_prism, make_wheel
from fanforge.graph6 import read_file

DATA = Path(__file__).parent / "data"
CORPUS8 = DATA / "threeconn_le8.g6"


@pytest.fixture(scope="session")
def small_corpus():
    """Every 3-connected simple graph on 4..7 vertices."""
    return corpus(7)


@pytest.fixture(scope="session")
def corpus8():
    return [g for _, g in read_file(CORPUS8)]


@pytest.fixture
def prism():
    return make_prism()


@pytest.fixture
def q3():
    return make_hypercube(3)


@pytest.fixture
def k4():
    return make_complete(4)


@pytest.fixture
def w5():
    return make_wheel(5)


def reduction_pairs(graphs, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.choice(graphs)
        res = random_reduction(g, rng)
        if res is not None:
            out.append((g, res[0], res[1]))
    return out


_ACCEPTANCE = "fanforge_acceptance"


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the summary."""
    lines = request.config.__dict__.setdefault(_ACCEPTANCE, {})

    def record(number, ok, detail):
        lines[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        assert ok, detail
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.__dict__.get(_ACCEPTANCE)
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
