"""Constructive upper bounds on metric dimension.

Each construction returns a :class:`ConstructionReport` whose set has been
checked against the graph's distance matrix before returning.  A set that
fails to resolve raises :class:`VerificationFailed` with the offending
pair; a resolving set larger than the claimed bound raises
:class:`BoundExceeded`.  Nothing is silently accepted.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from . import families
from .exceptions import (
    BoundExceeded,
    ConstructionError,
    ColoringNotFound,
    DomainError,
    ImproperColoring,
    MissingCertificate,
    NotHamiltonianCycle,
    NotMaximalPlanar,
    NotOuterplanar,
    RepairFailed,
    TooLarge,
    VerificationFailed,
)
from .graph import Graph, biconnected_components
from .metric import (
    VertexSet,
    alike_partition,
    find_unresolved_pair,
    resolved_vertices,
)
from .recognition import (
    Coloring,
    as_coloring,
    color_outerplanar,
    color_with,
    hamiltonian_cycle,
    is_bipyramid,
    is_hamiltonian_cycle,
    is_maximal_planar_certificate,
    is_outerplanar,
)

METHODS = ("hamiltonian_outerplanar", "coloring", "outerplanar", "maximal_planar", "bipyramid")


@dataclass(frozen=True)
class ConstructionReport:
    method: str
    members: VertexSet
    bound: int
    verified: bool
    notes: str = ""
    certificate: Mapping[str, Any] = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "set": list(self.members),
            "bound": self.bound,
            "verified": self.verified,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _finish(g: Graph, method: str, members, bound: int, notes: list[str],
            certificate: Mapping[str, Any] | None = None) -> ConstructionReport:
    members = tuple(sorted(set(members)))
    pair = find_unresolved_pair(g.distances, members)
    if pair is not None:
        raise VerificationFailed(
            f"{method}: set {list(members)} leaves vertices {pair[0]} and {pair[1]} unresolved",
            witness=pair, members=list(members),
        )
    if len(members) > bound:
        raise BoundExceeded(
            f"{method}: resolving set of size {len(members)} exceeds the bound {bound}",
            size=len(members), bound=bound, members=list(members),
        )
    return ConstructionReport(method, members, bound, True, "; ".join(notes), dict(certificate or {}))


def ceil_half(n: int) -> int:
    return (n + 1) // 2


def hamiltonian_outerplanar_set(g: Graph, cycle_order: Sequence[int] | None = None) -> ConstructionReport:
    """Select every other vertex (1-based odd positions) along a Hamiltonian
    cycle of an outerplanar graph; at most ceil(n/2) vertices.

    ``cycle_order`` defaults to the graph's Hamiltonian cycle (its
    ``outer_cycle`` certificate when present).  Outerplanarity is the
    caller's responsibility.
    """
    if cycle_order is None:
        cycle_order = hamiltonian_cycle(g)
        if cycle_order is None:
            raise NotHamiltonianCycle("graph has no Hamiltonian cycle")
    order = [int(v) for v in cycle_order]
    if not is_hamiltonian_cycle(g, order):
        raise NotHamiltonianCycle(f"{order} is not a Hamiltonian cycle of the graph")
    members = order[0::2]
    return _finish(g, "hamiltonian_outerplanar", members, ceil_half(g.n), [],
                   {"cycle_order": order})


def _check_proper(g: Graph, coloring: Coloring) -> None:
    for u, v in sorted(g.edges):
        if coloring.colors[u] == coloring.colors[v]:
            raise ImproperColoring(f"edge ({u}, {v}) is monochromatic (color {coloring.colors[u]})")


def coloring_selection(g: Graph, coloring: Coloring) -> tuple[list[int], int]:
    """Every vertex outside the most frequent color class, plus all but the
    smallest member of each alike class inside it.

    Returns the selection and the dropped color (ties go to the smallest
    color index).
    """
    classes = coloring.classes()
    big = max(range(len(classes)), key=lambda c: (len(classes[c]), -c))
    inside = set(classes[big])
    chosen = [v for v in range(g.n) if v not in inside]
    for alike in alike_partition(g).classes:
        members = [v for v in alike if v in inside]
        chosen.extend(members[1:])
    return sorted(chosen), big


def coloring_bound(n: int, colors: int, s: int) -> int:
    return (colors - 1) * n // colors + (n - s)


def coloring_bound_set(g: Graph, coloring: Sequence[int] | Mapping[int, int] | Coloring) -> ConstructionReport:
    if not isinstance(coloring, Coloring):
        coloring = as_coloring(coloring, g.n)
    _check_proper(g, coloring)
    chosen, big = coloring_selection(g, coloring)
    chi = coloring.num_colors
    bound = coloring_bound(g.n, chi, alike_partition(g).s)
    return _finish(g, "coloring", chosen, bound, [f"{chi} colors, dropped color {big}"],
                   {"coloring": list(coloring.colors)})


def _outerplanar_or_raise(g: Graph) -> None:
    try:
        ok = is_outerplanar(g)
    except TooLarge as exc:
        raise NotOuterplanar(str(exc)) from None
    if not ok:
        raise NotOuterplanar("graph has a K4 or K2,3 minor")


def _patch_bad_blocks(g: Graph) -> tuple[set[tuple[int, int]], list[str]]:
    """Edge set with each C4 block given a chord between an alike pair and
    each diamond block's diagonal swapped for the opposite pair."""
    edges = set(g.edges)
    notes = []
    alike = alike_partition(g).class_index()
    for block in biconnected_components(g).blocks:
        if len(block.vertices) != 4:
            continue
        vs = block.vertices
        missing = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if (a, b) not in block.edges]
        if len(block.edges) == 4:
            # C4: the two missing pairs are the diagonals; prefer one alike in g
            missing.sort(key=lambda p: (alike[p[0]] != alike[p[1]], p))
            chord = missing[0]
            edges.add(chord)
            notes.append(f"C4 block {list(vs)}: temporary chord {chord[0]}-{chord[1]}")
        elif len(block.edges) == 5:
            (p, q), = missing
            r, s = (v for v in vs if v not in (p, q))
            edges.discard((r, s))
            edges.add((p, q))
            notes.append(f"diamond block {list(vs)}: diagonal {r}-{s} swapped for {p}-{q}")
    return edges, notes


def prune_redundant(g: Graph, members: Sequence[int]) -> list[int]:
    """Drop members (largest index first) while the set keeps resolving ``g``."""
    dist = g.distances
    kept = sorted(members)
    changed = True
    while changed:
        changed = False
        for v in reversed(kept):
            trial = [m for m in kept if m != v]
            if find_unresolved_pair(dist, trial) is None:
                kept = trial
                changed = True
                break
    return kept


def outerplanar_set(g: Graph) -> ConstructionReport:
    """Three-coloring construction for outerplanar graphs (bound floor(2n/3)).

    Bad 4-vertex blocks are patched with temporary edges, the patched graph
    is 3-colored by 2-degenerate elimination, the coloring selection is
    taken on the patched graph and the result is checked on ``g`` itself.
    Alike vertices outside the bad blocks (leaves on a common vertex, for
    instance) can push the raw selection over the bound; only then is it
    pruned to a minimal resolving subset, and the notes say so.
    """
    _outerplanar_or_raise(g)
    edges, notes = _patch_bad_blocks(g)
    patched = Graph(g.n, edges) if edges != set(g.edges) else g
    coloring = color_outerplanar(patched)
    chosen, big = coloring_selection(patched, coloring)
    notes.append(f"{coloring.num_colors} colors, dropped color {big}")
    bound = 2 * g.n // 3
    if len(chosen) > bound and find_unresolved_pair(g.distances, chosen) is None:
        pruned = prune_redundant(g, chosen)
        notes.append(f"raw selection {len(chosen)} over bound, pruned to {len(pruned)}")
        chosen = pruned
    return _finish(g, "outerplanar", chosen, bound, notes,
                   {"coloring": list(coloring.colors), "patched_edges": sorted(edges ^ set(g.edges))})


def bipyramid_dimension(n: int) -> int:
    """floor(2n/5) + 1 for a bipyramid with an ``n``-vertex rim, n >= 5."""
    if n < 5:
        raise DomainError(f"bipyramid dimension formula is stated for rim n >= 5, got {n}")
    return 2 * n // 5 + 1


def bipyramid_candidate(n: int) -> list[int]:
    """a_1, b_1, b_n and every b_5k, b_5k+2 with index <= n, in the
    canonical layout of :func:`families.bipyramid`."""
    rim_idx = {1, n}
    k = 1
    while 5 * k <= n:
        rim_idx.add(5 * k)
        if 5 * k + 2 <= n:
            rim_idx.add(5 * k + 2)
        k += 1
    return [0] + sorted(j + 1 for j in rim_idx)


def _repair(g: Graph, start: list[int], target: int, rim: list[int]) -> tuple[list[int], list[str]]:
    """Greedy rim repair: complete to a resolving set, prune redundant rim
    members, then trade two rim members for one while above ``target``.
    Scans go in increasing vertex order so the outcome is deterministic."""
    dist = g.distances
    members = sorted(start)
    notes: list[str] = []

    def resolves(ms) -> bool:
        return find_unresolved_pair(dist, sorted(ms)) is None

    while not resolves(members):
        best = max((v for v in rim if v not in members),
                   key=lambda v: (len(resolved_vertices(g, dist, members + [v])), -v))
        members = sorted(members + [best])
        notes.append(f"added {best}")
    changed = True
    while changed:
        changed = False
        for v in [m for m in members if m in rim]:
            trial = [m for m in members if m != v]
            if resolves(trial):
                members = trial
                notes.append(f"dropped {v}")
                changed = True
                break
    while len(members) > target:
        inside = [m for m in members if m in rim]
        outside = [v for v in rim if v not in members]
        move = None
        for i, a in enumerate(inside):
            for b in inside[i + 1:]:
                for x in outside:
                    trial = sorted([m for m in members if m not in (a, b)] + [x])
                    if resolves(trial):
                        move = (a, b, x, trial)
                        break
                if move:
                    break
            if move:
                break
        if move is None:
            break
        a, b, x, members = move
        notes.append(f"replaced {a},{b} by {x}")
    return members, notes


def _bipyramid_members(n: int) -> tuple[list[int], list[str], int]:
    g = families.bipyramid(n)
    target = 2 * n // 5 + 1
    start = bipyramid_candidate(n)
    rim = list(range(2, n + 2))
    if find_unresolved_pair(g.distances, start) is None and len(start) <= target:
        return start, [], target
    members, notes = _repair(g, start, target, rim)
    notes.insert(0, f"candidate {start} repaired")
    return members, notes, target


def bipyramid_set(n: int) -> ConstructionReport:
    """Resolving set of size floor(2n/5) + 1 on the canonical bipyramid with
    an ``n``-vertex rim (apexes 0, 1; rim b_j at index j + 1)."""
    if n < 5:
        raise DomainError(f"bipyramid_set needs rim n >= 5, got {n}")
    members, notes, target = _bipyramid_members(n)
    g = families.bipyramid(n)
    if len(members) > target or find_unresolved_pair(g.distances, members) is not None:
        raise RepairFailed(
            f"bipyramid n={n}: repair stopped at {len(members)} vertices {members}, target {target}",
            best=members,
        )
    return _finish(g, "bipyramid", members, target, notes, {"rim_size": n})


def maximal_planar_set(g: Graph) -> ConstructionReport:
    """Four-coloring construction for triangulations (bound floor(3n/4)),
    with bipyramids handled by the rim construction."""
    if g.n < 4:
        raise NotMaximalPlanar(f"maximal planar construction needs n >= 4, got {g.n}")
    try:
        ok = is_maximal_planar_certificate(g)
    except MissingCertificate as exc:
        raise NotMaximalPlanar(str(exc)) from None
    if not ok:
        raise NotMaximalPlanar("faces certificate does not describe a triangulation")
    bound = 3 * g.n // 4
    dec = is_bipyramid(g) if g.n >= 5 else None
    if dec is not None:
        rim_n = dec.rim_size
        canon, notes, target = _bipyramid_members(rim_n)
        relabel = {0: dec.apexes[0], 1: dec.apexes[1]}
        relabel.update({j + 2: v for j, v in enumerate(dec.rim)})
        members = [relabel[v] for v in canon]
        notes.insert(0, f"bipyramid with rim {rim_n}, apexes {list(dec.apexes)}")
        if len(canon) > target:
            notes.append(f"rim construction reached {len(canon)}, above its target {target}")
        return _finish(g, "maximal_planar", members, bound, notes,
                       {"apexes": list(dec.apexes), "rim": list(dec.rim)})
    coloring = color_with(g, 4)
    if coloring is None:
        raise ColoringNotFound("no proper 4-coloring exists; faces certificate must be wrong")
    chosen, big = coloring_selection(g, coloring)
    return _finish(g, "maximal_planar", chosen, bound,
                   [f"{coloring.num_colors} colors, dropped color {big}"],
                   {"coloring": list(coloring.colors)})


def bipyramid_graph_set(g: Graph) -> ConstructionReport:
    """:func:`bipyramid_set` transported onto an arbitrary labelling of a
    bipyramid recognised by :func:`is_bipyramid`."""
    dec = is_bipyramid(g) if g.n >= 5 else None
    if dec is None:
        raise DomainError("graph is not a bipyramid")
    report = bipyramid_set(dec.rim_size)
    relabel = {0: dec.apexes[0], 1: dec.apexes[1]}
    relabel.update({j + 2: v for j, v in enumerate(dec.rim)})
    members = [relabel[v] for v in report.members]
    notes = [report.notes] if report.notes else []
    return _finish(g, "bipyramid", members, report.bound, notes,
                   {"apexes": list(dec.apexes), "rim": list(dec.rim)})


BOUND_METHODS = ("hamiltonian", "coloring", "outerplanar", "maxplanar", "bipyramid")


def applicable_methods(g: Graph) -> list[str]:
    """Constructions whose preconditions the graph's certificates meet, in
    the order ``auto`` tries them."""
    out = []
    if g.n >= 7 and "faces" in g.certificates:
        dec = is_bipyramid(g)
        if dec is not None and dec.rim_size >= 5:
            out.append("bipyramid")
    if g.n >= 4 and "faces" in g.certificates:
        out.append("maxplanar")
    if "outer_cycle" in g.certificates:
        out.append("hamiltonian")
    if "outer_cycle" in g.certificates or "convex_order" in g.certificates:
        out.append("outerplanar")
    out.append("coloring")
    return out


def construct(g: Graph, method: str, budget: int | None = None) -> ConstructionReport:
    """Run a bound construction by its short name.

    ``auto`` tries :func:`applicable_methods` in order and returns the
    first report that verifies within its bound; failures of earlier
    methods are listed in the notes.  If every method fails, the last
    error propagates.
    """
    from .recognition import chromatic_coloring

    if method == "auto":
        failures = []
        for name in applicable_methods(g):
            try:
                report = construct(g, name, budget)
            except ConstructionError as exc:
                failures.append(f"{name}: {type(exc).__name__}")
                if name == "coloring":
                    raise
                continue
            if failures:
                notes = "; ".join(x for x in [report.notes, "auto skipped " + ", ".join(failures)] if x)
                report = ConstructionReport(report.method, report.members, report.bound,
                                            report.verified, notes, report.certificate)
            return report
    if method == "hamiltonian":
        return hamiltonian_outerplanar_set(g)
    if method == "coloring":
        return coloring_bound_set(g, chromatic_coloring(g, budget))
    if method == "outerplanar":
        return outerplanar_set(g)
    if method == "maxplanar":
        return maximal_planar_set(g)
    if method == "bipyramid":
        return bipyramid_graph_set(g)
    raise DomainError(f"unknown method {method!r}; choose from {BOUND_METHODS + ('auto',)}")
