from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from resolvedim import families as F
from resolvedim.graph import Graph, build_graph


def diamond() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], {"outer_cycle": [0, 1, 2, 3]})


def two_triangles_bridge() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)],
                       {"convex_order": [0, 1, 2, 3, 4, 5]})


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, j) for j in range(1, leaves + 1)],
                       {"convex_order": list(range(leaves + 1))})


def small_corpus(max_n: int = 12) -> list[Graph]:
    """Deterministic mix of every family plus a few hand-made graphs."""
    out: list[Graph] = [diamond(), two_triangles_bridge(), star(3), star(4)]
    for n in range(1, max_n + 1):
        out.append(F.path(n))
        if n <= 7:
            out.append(F.complete(n))
        if n >= 3:
            out.append(F.cycle(n))
            out.append(F.complete_bipartite_2(n))
            for seed in range(3):
                out.append(F.max_outerplanar(n, seed))
                out.append(F.outerplanar_random(n, seed))
        if n >= 4:
            out.append(F.wheel(n - 1))
            for seed in range(3):
                out.append(F.stacked_triangulation(n, seed))
        if n >= 5:
            out.append(F.bipyramid(n - 2))
    return [g for g in out if g.n <= max_n]


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    return small_corpus(12)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        edges |= set(extra)
    return build_graph(n, sorted(edges))


ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def gate(request):
    """Record one acceptance verdict: ``gate(number, ok, detail)``."""
    results = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        results[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
