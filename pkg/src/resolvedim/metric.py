"""Alike vertices, resolving-set checks and the exact metric dimension solver."""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .exceptions import BudgetExceeded, GraphError
from .graph import DistanceMatrix, Graph

DEFAULT_BUDGET = 10_000_000

VertexSet = tuple[int, ...]


def default_budget() -> int:
    env = os.environ.get("RESOLVEDIM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def vertex_set(g: Graph, members: Iterable[int]) -> VertexSet:
    """Sorted, deduplicated tuple of vertex indices, checked against ``g``."""
    out = tuple(sorted({int(v) for v in members}))
    for v in out:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return out


@dataclass(frozen=True)
class AlikePartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.classes)

    def class_index(self) -> list[int]:
        idx = [0] * sum(len(c) for c in self.classes)
        for i, cls in enumerate(self.classes):
            for v in cls:
                idx[v] = i
        return idx


def alike_partition(g: Graph) -> AlikePartition:
    """Group vertices with identical open neighbourhoods.

    Classes are sorted internally and ordered by their smallest member.
    """
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    classes = sorted(tuple(c) for c in groups.values())
    return AlikePartition(tuple(classes))


@dataclass(frozen=True)
class AlikeBound:
    """``value`` is n - s.  ``requirements`` lists, per alike class, the
    minimum number of its members every resolving set must contain."""

    value: int
    forced: int
    requirements: tuple[tuple[tuple[int, ...], int], ...]

    def __int__(self) -> int:
        return self.value


def alike_lower_bound(g: Graph) -> AlikeBound:
    part = alike_partition(g)
    reqs = tuple((cls, len(cls) - 1) for cls in part.classes)
    forced = sum(r for _, r in reqs)
    return AlikeBound(g.n - part.s, forced, reqs)


def _signatures(dist: DistanceMatrix, members: Sequence[int]) -> list[tuple[int, ...]]:
    cols = dist.d[list(members)] if members else None
    if cols is None:
        return [()] * dist.n
    return [tuple(col) for col in cols.T.tolist()]


def find_unresolved_pair(dist: DistanceMatrix, members: Sequence[int]) -> tuple[int, int] | None:
    """Return the first pair (by second vertex, then first) whose distance
    vectors to ``members`` coincide, or ``None`` if the set resolves."""
    first_seen: dict[tuple[int, ...], int] = {}
    for v, sig in enumerate(_signatures(dist, members)):
        if sig in first_seen:
            return (first_seen[sig], v)
        first_seen[sig] = v
    return None


def is_resolving_set(g: Graph, dist: DistanceMatrix | None, members: Iterable[int]) -> bool:
    dist = dist if dist is not None else g.distances
    return find_unresolved_pair(dist, vertex_set(g, members)) is None


def resolved_vertices(g: Graph, dist: DistanceMatrix | None, members: Iterable[int]) -> set[int]:
    """Vertices whose distance vector to ``members`` is unique."""
    dist = dist if dist is not None else g.distances
    sigs = _signatures(dist, vertex_set(g, members))
    counts: dict[tuple[int, ...], int] = {}
    for sig in sigs:
        counts[sig] = counts.get(sig, 0) + 1
    return {v for v, sig in enumerate(sigs) if counts[sig] == 1}


class MetricDimension(NamedTuple):
    beta: int
    witness: VertexSet


class _Search:
    """Lexicographic depth-first search over k-subsets with pruning.

    Pruning rules: each alike class of size t must end up with at least
    t - 1 members; the current distance-vector partition must be splittable
    into singletons by the candidates still available; and the largest
    unresolved block cannot shrink faster than a factor (diameter + 1) per
    added landmark.
    """

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.n = g.n
        self.d = g.distances.d.tolist()
        self.branching = g.distances.diameter + 1
        part = alike_partition(g)
        self.cls = part.class_index()
        self.need = [len(c) - 1 for c in part.classes]
        self.class_members = [list(c) for c in part.classes]
        self.budget = budget
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"metric dimension search exceeded {self.budget} nodes on n={self.n}", self.nodes
            )

    @staticmethod
    def _refine(labels: list[int], row: list[int]) -> tuple[list[int], int]:
        remap: dict[tuple[int, int], int] = {}
        out = []
        for lab, dv in zip(labels, row):
            key = (lab, dv)
            if key not in remap:
                remap[key] = len(remap)
            out.append(remap[key])
        return out, len(remap)

    def _feasible(self, start: int, chosen_count: list[int], slots: int, labels: list[int]) -> bool:
        deficit = 0
        for c, need in enumerate(self.need):
            miss = need - chosen_count[c]
            if miss > 0:
                avail = sum(1 for v in self.class_members[c] if v >= start)
                if avail < miss:
                    return False
                deficit += miss
        if deficit > slots:
            return False
        sizes: dict[int, int] = {}
        for lab in labels:
            sizes[lab] = sizes.get(lab, 0) + 1
        largest = max(sizes.values())
        if largest > self.branching ** slots:
            return False
        if largest > 1:
            refined, count = labels, len(sizes)
            for w in range(start, self.n):
                refined, count = self._refine(refined, self.d[w])
                if count == self.n:
                    break
            if count < self.n:
                return False
        return True

    def run(self, k: int, find_all: bool = False) -> list[VertexSet]:
        found: list[VertexSet] = []
        chosen: list[int] = []
        chosen_count = [0] * len(self.need)

        def dfs(start: int, labels: list[int], distinct: int) -> bool:
            self._tick()
            slots = k - len(chosen)
            if distinct == self.n and slots == 0:
                found.append(tuple(chosen))
                return not find_all
            if slots == 0 or not self._feasible(start, chosen_count, slots, labels):
                return False
            for w in range(start, self.n - slots + 1):
                chosen.append(w)
                chosen_count[self.cls[w]] += 1
                refined, count = self._refine(labels, self.d[w])
                stop = dfs(w + 1, refined, count)
                chosen.pop()
                chosen_count[self.cls[w]] -= 1
                if stop:
                    return True
            return False

        dfs(0, [0] * self.n, 1)
        return found


def _start_size(g: Graph) -> int:
    if g.n == 1:
        return 0
    return max(1, alike_lower_bound(g).value)


def metric_dimension_exact(g: Graph, budget: int | None = None) -> MetricDimension:
    """Exact metric dimension and the lexicographically smallest minimum
    resolving set.

    Sizes are tried from ``max(1, n - s)`` upward.  Raises
    :class:`BudgetExceeded` once ``budget`` search nodes are used.
    """
    if g.n == 1:
        return MetricDimension(0, ())
    search = _Search(g, budget if budget is not None else default_budget())
    for k in range(_start_size(g), g.n):
        hits = search.run(k)
        if hits:
            return MetricDimension(k, hits[0])
    raise AssertionError("n - 1 vertices always resolve a connected graph")


def minimum_resolving_sets(g: Graph, budget: int | None = None) -> list[VertexSet]:
    """All minimum resolving sets, in lexicographic order."""
    if g.n == 1:
        return [()]
    search = _Search(g, budget if budget is not None else default_budget())
    for k in range(_start_size(g), g.n):
        hits = search.run(k, find_all=True)
        if hits:
            return hits
    raise AssertionError("n - 1 vertices always resolve a connected graph")


def metric_dimension_bruteforce(g: Graph) -> MetricDimension:
    """Reference oracle: try every subset in order of size, no pruning."""
    dist = g.distances
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if find_unresolved_pair(dist, subset) is None:
                return MetricDimension(k, subset)
    raise AssertionError("unreachable")
