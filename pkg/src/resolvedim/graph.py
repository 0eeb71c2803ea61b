"""Graph representation, validation, distances and block decomposition.

Vertices are dense indices ``0..n-1``.  A :class:`Graph` is validated on
construction and never mutated afterwards, so derived data (adjacency,
distances) is cached on the instance.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .exceptions import (
    BadCertificate,
    Disconnected,
    DuplicateEdge,
    GraphError,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]

CERTIFICATE_KEYS = ("outer_cycle", "convex_order", "faces", "family")


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    ``certificates`` may hold structural witnesses produced by the
    generators:

    * ``outer_cycle``: Hamiltonian cycle bounding the outer face;
    * ``convex_order``: cyclic vertex order in which all edges are
      noncrossing (outerplanar graphs whose outer boundary is not a cycle);
    * ``faces``: the triangular faces of a triangulation;
    * ``family``: ``{"name": str, "params": {...}}``.
    """

    n: int
    edges: frozenset[Edge]
    certificates: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        object.__setattr__(self, "n", int(n))
        seen: set[Edge] = set()
        for raw in self.edges:
            u, v = (int(x) for x in raw)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(f"edge ({u}, {v}) has endpoint {x} outside 0..{n - 1}")
            e = _edge(u, v)
            if e in seen:
                raise DuplicateEdge(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        object.__setattr__(self, "edges", frozenset(seen))
        self._check_connected()
        object.__setattr__(self, "certificates", _validate_certificates(self, self.certificates or {}))

    def _check_connected(self) -> None:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        if not all(seen):
            missing = seen.index(False)
            raise Disconnected(f"graph is disconnected: vertex {missing} unreachable from 0")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distances(self)

    def with_certificates(self, **certs: Any) -> "Graph":
        merged = dict(self.certificates)
        merged.update(certs)
        return Graph(self.n, self.edges, merged)

    @property
    def family(self) -> dict | None:
        return self.certificates.get("family")

    def __repr__(self) -> str:
        fam = self.family
        tag = f", family={fam['name']}" if fam else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def _validate_certificates(g: Graph, certs: Mapping[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key in certs:
        if key not in CERTIFICATE_KEYS:
            raise BadCertificate(f"unknown certificate {key!r}")
    n = g.n
    for key in ("outer_cycle", "convex_order"):
        if key not in certs or certs[key] is None:
            continue
        order = [int(x) for x in certs[key]]
        if sorted(order) != list(range(n)):
            raise BadCertificate(f"{key} is not a permutation of 0..{n - 1}: {order}")
        if key == "outer_cycle":
            if n < 3:
                raise BadCertificate("outer_cycle needs at least 3 vertices")
            for i, u in enumerate(order):
                v = order[(i + 1) % n]
                if not g.has_edge(u, v):
                    raise BadCertificate(f"outer_cycle step ({u}, {v}) is not an edge")
        out[key] = tuple(order)
    if certs.get("faces") is not None:
        faces = []
        for face in certs["faces"]:
            tri = tuple(sorted(int(x) for x in face))
            if len(tri) != 3 or len(set(tri)) != 3:
                raise BadCertificate(f"face {list(face)} is not a triangle")
            a, b, c = tri
            for u, v in ((a, b), (b, c), (a, c)):
                if not (0 <= u < n and 0 <= v < n) or not g.has_edge(u, v):
                    raise BadCertificate(f"face {list(tri)} uses non-edge ({u}, {v})")
            faces.append(tri)
        out["faces"] = tuple(faces)
    if certs.get("family") is not None:
        fam = certs["family"]
        if not isinstance(fam, Mapping) or not isinstance(fam.get("name"), str):
            raise BadCertificate(f"family certificate must carry a name: {fam!r}")
        params = fam.get("params", {}) or {}
        out["family"] = {"name": fam["name"], "params": {str(k): int(v) for k, v in params.items()}}
    return out


def build_graph(n: int, edges: Iterable[Sequence[int]], certificates: Mapping[str, Any] | None = None) -> Graph:
    """Validate and build a :class:`Graph`.

    Raises :class:`Disconnected`, :class:`SelfLoop`, :class:`DuplicateEdge`,
    :class:`VertexOutOfRange` or :class:`BadCertificate` naming the
    offending element.
    """
    return Graph(n, list(tuple(e) for e in edges), dict(certificates or {}))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``d`` is a read-only ``n x n`` integer array."""

    n: int
    d: np.ndarray = field(repr=False)

    def __getitem__(self, idx):
        return self.d[idx]

    def row(self, u: int) -> list[int]:
        return self.d[u].tolist()

    @property
    def diameter(self) -> int:
        return int(self.d.max())


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    d = np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64)
    d.setflags(write=False)
    return DistanceMatrix(g.n, d)


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]


def biconnected_components(g: Graph) -> BlockDecomposition:
    """Block-cut decomposition via an iterative Hopcroft-Tarjan edge stack.

    Blocks are ordered by their sorted vertex tuples (so by smallest vertex
    first); an isolated single vertex forms one edgeless block.
    """
    n = g.n
    if n == 1:
        return BlockDecomposition((Block((0,), ()),), ())
    disc = [-1] * n
    low = [0] * n
    nbrs = [sorted(g.adj[u]) for u in range(n)]
    blocks: list[Block] = []
    cuts: set[int] = set()
    edge_stack: list[Edge] = []
    timer = 0

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent, next neighbour index)
    stack: list[list[int]] = [[root, -1, 0]]
    while stack:
        frame = stack[-1]
        u, parent, i = frame
        if i < len(nbrs[u]):
            frame[2] += 1
            v = nbrs[u][i]
            if disc[v] < 0:
                edge_stack.append(_edge(u, v))
                disc[v] = low[v] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append([v, u, 0])
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append(_edge(u, v))
                low[u] = min(low[u], disc[v])
            continue
        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[u])
        if low[u] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            target = _edge(parent, u)
            comp: list[Edge] = []
            while True:
                e = edge_stack.pop()
                comp.append(e)
                if e == target:
                    break
            verts = sorted({x for e in comp for x in e})
            blocks.append(Block(tuple(verts), tuple(sorted(comp))))
    if root_children > 1:
        cuts.add(root)
    blocks.sort(key=lambda b: b.vertices)
    return BlockDecomposition(tuple(blocks), tuple(sorted(cuts)))


def induced_subgraph_edges(g: Graph, vertices: Iterable[int]) -> list[Edge]:
    vs = set(vertices)
    return sorted(e for e in g.edges if e[0] in vs and e[1] in vs)


def graph_to_dict(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    certs: dict[str, Any] = {}
    for key in ("outer_cycle", "convex_order"):
        if key in g.certificates:
            certs[key] = list(g.certificates[key])
    if "faces" in g.certificates:
        certs["faces"] = [list(f) for f in g.certificates["faces"]]
    if "family" in g.certificates:
        certs["family"] = g.certificates["family"]
    if certs:
        out["certificates"] = certs
    return out


def graph_from_dict(data: Mapping[str, Any]) -> Graph:
    try:
        n = data["n"]
        edges = data["edges"]
    except KeyError as exc:
        raise GraphError(f"graph JSON missing field {exc.args[0]!r}") from None
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
    return build_graph(n, edges, data.get("certificates"))


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True)


def load_graph(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_dict(json.load(fh))


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(g) + "\n", encoding="utf-8")
