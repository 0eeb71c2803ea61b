"""Colorings, certificate validation and small-graph structure recognition."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .exceptions import (
    BudgetExceeded,
    DegeneracyViolated,
    DomainError,
    MissingCertificate,
    TooLarge,
)
from .graph import Graph
from .metric import default_budget

MINOR_SEARCH_LIMIT = 12


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def as_coloring(colors: Sequence[int] | Mapping[int, int], n: int) -> Coloring:
    """Normalise a vertex->color map to a :class:`Coloring` with dense
    color indices, preserving the relative order of the given labels."""
    if isinstance(colors, Mapping):
        raw = [colors[v] for v in range(n)]
    else:
        raw = list(colors)
    if len(raw) != n:
        raise ValueError(f"coloring has {len(raw)} entries for {n} vertices")
    dense = {c: i for i, c in enumerate(sorted(set(raw)))}
    return Coloring(tuple(dense[c] for c in raw))


def color_with(g: Graph, k: int, budget: int | None = None) -> Coloring | None:
    """Proper ``k``-coloring by DSATUR-ordered backtracking.

    Returns ``None`` when the search proves no ``k``-coloring exists and
    raises :class:`BudgetExceeded` when it gives up.
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    budget = budget if budget is not None else default_budget()
    n = g.n
    adj = [sorted(g.adj[v]) for v in range(n)]
    colors = [-1] * n
    # per vertex, how many coloured neighbours use each color
    seen = [[0] * k for _ in range(n)]
    saturation = [0] * n
    nodes = 0

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                cand = (saturation[v], len(adj[v]), -v)
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for u in adj[v]:
            before = seen[u][c]
            seen[u][c] += delta
            if before == 0 and delta > 0:
                saturation[u] += 1
            elif before == 1 and delta < 0:
                saturation[u] -= 1

    def solve(depth: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"{k}-coloring search exceeded {budget} nodes", nodes)
        if depth == n:
            return True
        v = pick()
        for c in range(min(used + 1, k)):
            if seen[v][c]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if solve(depth + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    if not solve(0, 0):
        return None
    return Coloring(tuple(colors))


def chromatic_coloring(g: Graph, budget: int | None = None, max_colors: int | None = None) -> Coloring:
    """Coloring with the fewest colors, found by trying k = 1, 2, ..."""
    limit = max_colors or g.n
    for k in range(1, limit + 1):
        col = color_with(g, k, budget)
        if col is not None:
            return col
    raise DomainError(f"no coloring with at most {limit} colors")


def degeneracy_order(g: Graph, bound: int = 2) -> list[int]:
    """Elimination order repeatedly removing a minimum-degree vertex
    (smallest index on ties).  Raises if the minimum degree ever exceeds
    ``bound``."""
    alive = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    order = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        if deg[v] > bound:
            raise DegeneracyViolated(
                f"every remaining vertex has degree >= {deg[v]} (> {bound}); not {bound}-degenerate"
            )
        order.append(v)
        alive.remove(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return order


def color_outerplanar(g: Graph) -> Coloring:
    """Three-coloring of a 2-degenerate graph: eliminate min-degree vertices,
    then colour greedily in reverse elimination order."""
    order = degeneracy_order(g, 2)
    colors = [-1] * g.n
    for v in reversed(order):
        taken = {colors[u] for u in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return as_coloring(colors, g.n)


def _cyclic_order(g: Graph) -> tuple[int, ...]:
    order = g.certificates.get("outer_cycle") or g.certificates.get("convex_order")
    if order is None:
        raise MissingCertificate("graph carries neither outer_cycle nor convex_order")
    return order


def is_outerplanar_certificate(g: Graph) -> bool:
    """Check that every edge is a side or a chord of the certified cyclic
    order and that no two chords cross."""
    order = _cyclic_order(g)
    n = g.n
    pos = {v: i for i, v in enumerate(order)}
    chords = []
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        if b - a == 1 or (a == 0 and b == n - 1):
            continue
        chords.append((a, b))
    chords.sort()
    for i, (a, b) in enumerate(chords):
        for c, d in chords[i + 1:]:
            if c >= b:
                break
            if a < c < b < d:
                return False
    return True


def is_maximal_planar_certificate(g: Graph) -> bool:
    """Face-list check: m = 3n - 6, 2n - 4 distinct triangular faces, each
    edge on exactly two faces and each vertex's faces forming a single
    cycle around it (so the faces tile a sphere)."""
    faces = g.certificates.get("faces")
    if faces is None:
        raise MissingCertificate("graph carries no faces certificate")
    n = g.n
    if n < 4:
        raise DomainError("maximal planar certificate check needs n >= 4")
    if g.m != 3 * n - 6 or len(faces) != 2 * n - 4 or len(set(faces)) != len(faces):
        return False
    count: dict[tuple[int, int], int] = {}
    for a, b, c in faces:
        for e in ((a, b), (b, c), (a, c)):
            count[e] = count.get(e, 0) + 1
    if set(count) != set(g.edges) or any(x != 2 for x in count.values()):
        return False
    # link of v: the edges opposite v in its incident faces must form one cycle
    for v in range(n):
        link: dict[int, list[int]] = {}
        for f in faces:
            if v in f:
                x, y = (w for w in f if w != v)
                link.setdefault(x, []).append(y)
                link.setdefault(y, []).append(x)
        if not link or any(len(nb) != 2 for nb in link.values()):
            return False
        start = next(iter(link))
        prev, cur, steps = None, start, 0
        while True:
            nxt = link[cur][0] if link[cur][0] != prev else link[cur][1]
            prev, cur = cur, nxt
            steps += 1
            if cur == start:
                break
        if steps != len(link):
            return False
    return True


@dataclass(frozen=True)
class BipyramidDecomposition:
    apexes: tuple[int, int]
    rim: tuple[int, ...]

    @property
    def rim_size(self) -> int:
        return len(self.rim)


def _induced_cycle_order(g: Graph, verts: Sequence[int]) -> tuple[int, ...] | None:
    vs = set(verts)
    if len(vs) < 3:
        return None
    nb = {v: sorted(u for u in g.adj[v] if u in vs) for v in vs}
    if any(len(x) != 2 for x in nb.values()):
        return None
    start = min(vs)
    order = [start]
    prev, cur = start, nb[start][0]
    while cur != start:
        order.append(cur)
        a, b = nb[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(order) if len(order) == len(vs) else None


def is_bipyramid(g: Graph) -> BipyramidDecomposition | None:
    """Find two non-adjacent apexes adjacent to everything else whose
    removal leaves a single cycle.  The lexicographically smallest apex
    pair wins; the rim starts at its smallest vertex and steps to the
    smaller of that vertex's rim neighbours."""
    n = g.n
    if n < 5:
        raise DomainError("bipyramid recognition needs at least 5 vertices")
    universal = [v for v in range(n) if g.degree(v) >= n - 2]
    for i, a in enumerate(universal):
        for b in universal[i + 1:]:
            if g.has_edge(a, b):
                continue
            rest = [v for v in range(n) if v not in (a, b)]
            if not all(v in g.adj[a] and v in g.adj[b] for v in rest):
                continue
            rim = _induced_cycle_order(g, rest)
            if rim is not None:
                return BipyramidDecomposition((a, b), rim)
    return None


def _normalise_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    i = list(cycle).index(0)
    rot = list(cycle[i:]) + list(cycle[:i])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def is_hamiltonian_cycle(g: Graph, order: Sequence[int]) -> bool:
    n = g.n
    if n < 3 or sorted(order) != list(range(n)):
        return False
    return all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n))


def hamiltonian_cycle(g: Graph, budget: int | None = None) -> tuple[int, ...] | None:
    """Hamiltonian cycle starting at vertex 0.

    A valid ``outer_cycle`` certificate is passed through (rotated to
    start at 0, oriented towards the smaller neighbour).  Otherwise a
    backtracking search returns the lexicographically smallest cycle.
    """
    cert = g.certificates.get("outer_cycle")
    if cert is not None and is_hamiltonian_cycle(g, cert):
        return _normalise_cycle(cert)
    n = g.n
    if n < 3:
        return None
    budget = budget if budget is not None else default_budget()
    adj = [sorted(g.adj[v]) for v in range(n)]
    if any(len(a) < 2 for a in adj):
        return None
    path = [0]
    used = [False] * n
    used[0] = True
    nodes = 0

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"Hamiltonian cycle search exceeded {budget} nodes", nodes)
        u = path[-1]
        if len(path) == n:
            return 0 in g.adj[u]
        for v in adj[u]:
            if used[v]:
                continue
            used[v] = True
            path.append(v)
            if extend():
                return True
            path.pop()
            used[v] = False
        return False

    return tuple(path) if extend() else None


# Minor targets as (vertex count, edges, interchangeable vertex groups).
_TARGETS = {
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], [(0, 1, 2, 3)]),
    "K23": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], [(0, 1), (2, 3, 4)]),
}


def _strip_leaves(g: Graph) -> dict[int, set[int]]:
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    queue = [v for v in adj if len(adj[v]) <= 1]
    while queue:
        v = queue.pop()
        if v not in adj:
            continue
        for u in adj.pop(v):
            adj[u].discard(v)
            if len(adj[u]) <= 1:
                queue.append(u)
    return adj


def _simple_paths(adj: dict[int, set[int]], src: int, dst: int, blocked: set[int]) -> Iterator[list[int]]:
    """Simple src-dst paths avoiding ``blocked``; yields internal vertices."""
    stack = [(src, iter(sorted(adj[src])))]
    onpath = {src}
    inner: list[int] = []
    while stack:
        u, it = stack[-1]
        for v in it:
            if v == dst:
                yield list(inner)
                continue
            if v in onpath or v in blocked:
                continue
            onpath.add(v)
            inner.append(v)
            stack.append((v, iter(sorted(adj[v]))))
            break
        else:
            stack.pop()
            if inner and u == inner[-1]:
                inner.pop()
            onpath.discard(u)


def _connected_avoiding(adj: dict[int, set[int]], src: int, dst: int, blocked: set[int]) -> bool:
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v == dst:
                return True
            if v not in seen and v not in blocked:
                seen.add(v)
                stack.append(v)
    return False


def has_minor_small(g: Graph, target: str) -> bool:
    """Decide whether ``target`` (``"K4"`` or ``"K23"``) is a minor of ``g``.

    Both targets have maximum degree 3, so a minor exists iff a subdivision
    does.  The search picks branch vertices (symmetric choices pruned) and
    routes internally disjoint paths for the target's edges by
    backtracking.
    """
    if target not in _TARGETS:
        raise DomainError(f"unknown minor target {target!r}; expected K4 or K23")
    if g.n > MINOR_SEARCH_LIMIT:
        raise TooLarge(f"minor search limited to n <= {MINOR_SEARCH_LIMIT}, got {g.n}")
    h_n, h_edges, groups = _TARGETS[target]
    h_deg = [sum(1 for e in h_edges if x in e) for x in range(h_n)]
    adj = _strip_leaves(g)
    verts = sorted(adj)
    if len(verts) < h_n:
        return False
    # route edges touching high-degree branch vertices first
    edge_order = sorted(h_edges, key=lambda e: -(h_deg[e[0]] + h_deg[e[1]]))

    def route(i: int, branch: list[int], used: set[int]) -> bool:
        if i == len(edge_order):
            return True
        a, b = edge_order[i]
        src, dst = branch[a], branch[b]
        for rest in edge_order[i:]:
            if not _connected_avoiding(adj, branch[rest[0]], branch[rest[1]], used - {branch[rest[0]], branch[rest[1]]}):
                return False
        blocked = used - {src, dst}
        for inner in _simple_paths(adj, src, dst, blocked):
            if route(i + 1, branch, used | set(inner)):
                return True
        return False

    def assign(x: int, branch: list[int]) -> bool:
        if x == h_n:
            return route(0, branch, set(branch))
        lo = -1
        for grp in groups:
            if x in grp and grp.index(x) > 0:
                lo = branch[grp[grp.index(x) - 1]]
        for v in verts:
            if v <= lo or v in branch or len(adj[v]) < h_deg[x]:
                continue
            branch.append(v)
            if assign(x + 1, branch):
                return True
            branch.pop()
        return False

    return assign(0, [])


def is_outerplanar(g: Graph) -> bool:
    """Outerplanarity via the graph's certificate, or for small graphs via
    the absence of K4 and K2,3 minors.  Raises :class:`TooLarge` when
    neither route applies."""
    if "outer_cycle" in g.certificates or "convex_order" in g.certificates:
        if is_outerplanar_certificate(g):
            return True
    if g.n <= MINOR_SEARCH_LIMIT:
        return not has_minor_small(g, "K4") and not has_minor_small(g, "K23")
    raise TooLarge(f"cannot decide outerplanarity of an uncertified graph with n={g.n}")
