"""Seeded generators for the graph families used throughout the package.

Every generator attaches a ``family`` certificate; outerplanar families
also carry ``outer_cycle`` (or ``convex_order`` when the outer boundary is
not a cycle) and triangulations carry their ``faces``.

Bipyramids are laid out as apexes ``0, 1`` followed by the rim
``2..n+1`` in cyclic order, so rim vertex ``b_j`` (1-based) is index
``j + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .exceptions import DomainError
from .graph import Graph, build_graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream: identical output on every platform and Python version."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, *salt: int) -> int:
    rng = SplitMix64(seed)
    for s in salt:
        rng = SplitMix64(rng.next_u64() ^ (s & MASK64))
    return rng.next_u64()


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict[str, int] = field(default_factory=dict)

    def key(self) -> tuple:
        return (self.name, tuple(sorted(self.params.items())))

    def label(self) -> str:
        return ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))


def _family(name: str, **params: int) -> dict:
    return {"name": name, "params": params}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)],
                       {"convex_order": list(range(n)), "family": _family("path", n=n)})


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)],
                       {"outer_cycle": list(range(n)), "family": _family("cycle", n=n)})


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    certs: dict = {"family": _family("complete", n=n)}
    if n <= 3:
        certs["convex_order"] = list(range(n))
    if n == 3:
        certs["outer_cycle"] = [0, 1, 2]
    if n == 4:
        certs["faces"] = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return build_graph(n, edges, certs)


def complete_bipartite_2(n: int) -> Graph:
    """K_{2,n-2}: vertices 0 and 1 on the small side."""
    _need(n >= 3, f"complete_bipartite_2 needs n >= 3, got {n}")
    edges = [(a, j) for a in (0, 1) for j in range(2, n)]
    certs: dict = {"family": _family("complete_bipartite_2", n=n)}
    if n == 3:
        certs["convex_order"] = [0, 2, 1]
    elif n == 4:
        certs["outer_cycle"] = [0, 2, 1, 3]
    return build_graph(n, edges, certs)


def wheel(n: int) -> Graph:
    """Hub 0 joined to a rim cycle 1..n."""
    _need(n >= 3, f"wheel needs a rim of at least 3, got {n}")
    edges = [(0, j) for j in range(1, n + 1)] + [(j, j % n + 1) for j in range(1, n + 1)]
    certs: dict = {"family": _family("wheel", n=n)}
    if n == 3:
        certs["faces"] = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return build_graph(n + 1, edges, certs)


def bipyramid(n: int) -> Graph:
    """Two apexes over a rim cycle of ``n`` vertices (``n + 2`` in total)."""
    _need(n >= 3, f"bipyramid needs a rim of at least 3, got {n}")
    rim = [j + 2 for j in range(n)]
    edges = [(a, b) for a in (0, 1) for b in rim]
    edges += [(rim[j], rim[(j + 1) % n]) for j in range(n)]
    faces = [(a, rim[j], rim[(j + 1) % n]) for a in (0, 1) for j in range(n)]
    return build_graph(n + 2, edges, {"faces": faces, "family": _family("bipyramid", n=n)})


def _triangulated_polygon(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Chords of a random triangulation of the convex polygon ``0..n-1``."""
    chords: list[tuple[int, int]] = []
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        apex = lo + 1 + rng.below(hi - lo - 1)
        for a, b in ((lo, apex), (apex, hi)):
            if b - a >= 2:
                chords.append((a, b))
                stack.append((a, b))
    return chords


def _relabel(n: int, rng: SplitMix64) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def max_outerplanar(n: int, seed: int = 0) -> Graph:
    """Random triangulated n-gon with a random vertex labelling."""
    _need(n >= 3, f"max_outerplanar needs n >= 3, got {n}")
    rng = SplitMix64(derive_seed(seed, 1, n))
    sides = [(i, (i + 1) % n) for i in range(n)]
    chords = _triangulated_polygon(n, rng)
    perm = _relabel(n, rng)
    edges = [(perm[a], perm[b]) for a, b in sides + chords]
    return build_graph(n, edges, {
        "outer_cycle": [perm[i] for i in range(n)],
        "family": _family("max_outerplanar", n=n, seed=seed),
    })


def outerplanar_random(n: int, seed: int = 0, keep: int = 50) -> Graph:
    """Maximal outerplanar graph with edges randomly thinned.

    Each edge is dropped with probability ``(100 - keep)%`` unless that
    disconnects the graph.  The certificate is the polygon order, as
    ``outer_cycle`` if every side survived and ``convex_order`` otherwise.
    """
    _need(n >= 3, f"outerplanar_random needs n >= 3, got {n}")
    _need(0 <= keep <= 100, f"keep is a percentage, got {keep}")
    rng = SplitMix64(derive_seed(seed, 2, n, keep))
    sides = [(i, (i + 1) % n) for i in range(n)]
    edges = sides + _triangulated_polygon(n, rng)
    candidates = list(edges)
    rng.shuffle(candidates)
    current = set(edges)
    for e in candidates:
        if rng.below(100) < keep:
            continue
        current.discard(e)
        if not _connected(n, current):
            current.add(e)
    perm = _relabel(n, rng)
    order = [perm[i] for i in range(n)]
    certs: dict = {"family": _family("outerplanar_random", n=n, seed=seed, keep=keep)}
    if all(s in current for s in sides):
        certs["outer_cycle"] = order
    else:
        certs["convex_order"] = order
    return build_graph(n, sorted((perm[a], perm[b]) for a, b in current), certs)


def _connected(n: int, edges: set[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for v in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def stacked_triangulation(n: int, seed: int = 0) -> Graph:
    """Apollonian network: K4 plus ``n - 4`` insertions into random faces."""
    _need(n >= 4, f"stacked_triangulation needs n >= 4, got {n}")
    rng = SplitMix64(derive_seed(seed, 3, n))
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for v in range(4, n):
        a, b, c = faces.pop(rng.below(len(faces)))
        edges += [(a, v), (b, v), (c, v)]
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return build_graph(n, edges, {"faces": faces, "family": _family("stacked_triangulation", n=n, seed=seed)})


GENERATORS: dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite_2": complete_bipartite_2,
    "wheel": wheel,
    "bipyramid": bipyramid,
    "max_outerplanar": max_outerplanar,
    "outerplanar_random": outerplanar_random,
    "stacked_triangulation": stacked_triangulation,
}

SEEDED = {"max_outerplanar", "outerplanar_random", "stacked_triangulation"}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``; same params give the same graph."""
    try:
        gen = GENERATORS[spec.name]
    except KeyError:
        raise DomainError(f"unknown family {spec.name!r}; choose from {sorted(GENERATORS)}") from None
    params = dict(spec.params)
    if "n" not in params:
        raise DomainError(f"family {spec.name} needs parameter n")
    allowed = {"n", "seed", "keep"} if spec.name == "outerplanar_random" else (
        {"n", "seed"} if spec.name in SEEDED else {"n"})
    extra = set(params) - allowed
    if extra:
        raise DomainError(f"family {spec.name} does not take {sorted(extra)}")
    return gen(**params)


def total_vertices(spec: FamilySpec) -> int:
    n = spec.params["n"]
    if spec.name == "bipyramid":
        return n + 2
    if spec.name == "wheel":
        return n + 1
    return n


def conjecture_corpus(max_n: int, seed: int = 0, variants: int = 3) -> list[Graph]:
    """Stacked triangulations and bipyramids with 4..max_n vertices in total.

    Stacked triangulations on 4 or 5 vertices are unique up to isomorphism,
    so they get one member each; larger sizes get ``variants`` seeds.
    """
    specs: list[FamilySpec] = []
    for total in range(4, max_n + 1):
        if total <= 5:
            specs.append(FamilySpec("stacked_triangulation", {"n": total, "seed": 0}))
        else:
            for i in range(variants):
                specs.append(FamilySpec("stacked_triangulation",
                                        {"n": total, "seed": derive_seed(seed, total, i) % 1_000_000}))
        if total >= 5:
            specs.append(FamilySpec("bipyramid", {"n": total - 2}))
    seen = set()
    out = []
    for spec in specs:
        if spec.key() in seen:
            continue
        seen.add(spec.key())
        out.append(generate(spec))
    return out
