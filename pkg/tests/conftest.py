import time
from contextlib import contextmanager

import hypothesis
import pytest
from hypothesis import strategies as st

from worpitzky.graph import LabeledGraph, positive_roots

hypothesis.settings.register_profile("default", deadline=None, max_examples=150)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=20)
hypothesis.settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = positive_roots(n)
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph(n, frozenset(p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def graphs_with_permutation(draw, min_n=1, max_n=7):
    G = draw(graphs(min_n, max_n))
    sigma = draw(st.permutations(list(G.vertices)))
    return G, tuple(sigma)


# named graphs from the worked examples
@pytest.fixture
def G_path():
    return LabeledGraph.from_edges(4, [(1, 2), (2, 3)])


@pytest.fixture
def G_prime():
    return LabeledGraph.from_edges(4, [(1, 4), (3, 4)])


@pytest.fixture
def claw():
    return LabeledGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


@contextmanager
def time_limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")
    config._acceptance = []


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("acceptance")
    if mark is None or call.when != "call":
        return
    passed = call.excinfo is None
    item.config._acceptance.append((mark.args[0], mark.args[1], passed, call.duration))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = sorted(config._acceptance, key=lambda r: r[0])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in rows:
        terminalreporter.write_line(f"[{number:>2}] {'PASS' if passed else 'FAIL'}  {duration:7.2f}s  {title}")
