import itertools
import random

import hypothesis
import pytest
from hypothesis import strategies as st

from starcrit.enumeration import enumerate_connected, enumerate_connected_upto
from starcrit.graph import Graph, from_edge_list

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_graphs(seed: int, count: int, max_n: int, min_n: int = 1) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(min_n, max_n), rng.random()) for _ in range(count)]


@pytest.fixture(scope="session")
def connected_upto_6():
    return list(enumerate_connected_upto(6))


@pytest.fixture(scope="session")
def connected_7():
    return list(enumerate_connected(7))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion.

    Usage: ``with criterion(3, "double-horn family", limit=60) as c: ...`` where
    ``c.detail`` may be set to a short summary of what was measured.
    """
    import contextlib
    import time

    @contextlib.contextmanager
    def _run(number, title, limit=None):
        class Record:
            detail = ""

        record = Record()
        start = time.perf_counter()
        ok = False
        try:
            yield record
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            if ok and limit is not None and elapsed >= limit:
                ok = False
                record.detail += f" (exceeded {limit} s)"
            line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} [{elapsed:.2f} s] {record.detail}".rstrip()
            ACCEPTANCE_LINES.append(line)
            print(line)
        if limit is not None:
            assert elapsed < limit, f"criterion {number} took {elapsed:.2f} s, limit {limit} s"

    return _run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
