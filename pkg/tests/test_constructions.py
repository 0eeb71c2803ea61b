import json

import pytest

from resolvedim import constructions as C
from resolvedim import families as F
from resolvedim.exceptions import (
    BoundExceeded,
    DomainError,
    ImproperColoring,
    NotHamiltonianCycle,
    NotMaximalPlanar,
    NotOuterplanar,
    RepairFailed,
    VerificationFailed,
)
from resolvedim.graph import build_graph
from resolvedim.metric import is_resolving_set, metric_dimension_exact, minimum_resolving_sets

from .conftest import diamond, star, two_triangles_bridge


def fan5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)],
                       {"outer_cycle": [0, 1, 2, 3, 4]})


def test_hamiltonian_examples():
    r = C.hamiltonian_outerplanar_set(F.cycle(6), [0, 1, 2, 3, 4, 5])
    assert r.members == (0, 2, 4) and r.bound == 3 and r.verified
    assert C.hamiltonian_outerplanar_set(fan5()).size == 3


def test_hamiltonian_fails_on_four_vertex_cycles():
    # Odd positions on C4 pick an opposite pair, which leaves the other pair
    # at equal distances; the diamond fails for either parity.
    with pytest.raises(VerificationFailed) as info:
        C.hamiltonian_outerplanar_set(F.cycle(4), [0, 1, 2, 3])
    assert info.value.witness == (1, 3)
    for order in ([0, 1, 2, 3], [1, 2, 3, 0]):
        with pytest.raises(VerificationFailed):
            C.hamiltonian_outerplanar_set(diamond(), order)
    assert metric_dimension_exact(F.cycle(4)).beta == 2 == metric_dimension_exact(diamond()).beta


def test_hamiltonian_rejects_bad_cycle():
    with pytest.raises(NotHamiltonianCycle):
        C.hamiltonian_outerplanar_set(F.cycle(5), [0, 2, 1, 3, 4])
    with pytest.raises(NotHamiltonianCycle):
        C.hamiltonian_outerplanar_set(F.path(5))


@pytest.mark.parametrize("seed", range(120))
def test_hamiltonian_on_max_outerplanar_n_at_least_5(seed):
    g = F.max_outerplanar(5 + seed % 16, seed)
    r = C.hamiltonian_outerplanar_set(g)
    assert r.size == (g.n + 1) // 2


def test_coloring_examples():
    r = C.coloring_bound_set(F.cycle(5), ["A", "B", "A", "B", "C"])
    assert r.members == (1, 3, 4) and r.bound == 3
    k4 = C.coloring_bound_set(F.complete(4), [0, 1, 2, 3])
    assert k4.size == 3
    c4 = C.coloring_bound_set(F.cycle(4), {0: 0, 1: 1, 2: 0, 3: 1})
    assert c4.members == (1, 2, 3) and c4.bound == 4
    with pytest.raises(ImproperColoring, match=r"\(0, 1\)"):
        C.coloring_bound_set(F.cycle(4), [0, 0, 1, 1])


def test_outerplanar_examples():
    assert C.outerplanar_set(F.cycle(6)).size <= 4
    assert C.outerplanar_set(diamond()).size <= 2
    assert C.outerplanar_set(two_triangles_bridge()).size <= 4
    with pytest.raises(NotOuterplanar):
        C.outerplanar_set(F.complete(4))
    with pytest.raises(NotOuterplanar):
        C.outerplanar_set(F.complete_bipartite_2(5))


def test_outerplanar_pruning_is_reported():
    # patched C4 gets 3 colors and its alike pair forces an extra vertex
    r = C.outerplanar_set(F.cycle(4))
    assert "temporary chord" in r.notes and "pruned" in r.notes
    assert r.size == 2


def test_outerplanar_star_exceeds_bound():
    # K_{1,6} is outerplanar with six alike leaves: beta = 5 > floor(14/3)
    g = star(6)
    assert metric_dimension_exact(g).beta == 5
    with pytest.raises(BoundExceeded) as info:
        C.outerplanar_set(g)
    assert info.value.size == 5 and info.value.bound == 4


def test_maximal_planar_examples():
    assert C.maximal_planar_set(F.complete(4)).size == 3
    assert C.maximal_planar_set(F.stacked_triangulation(6, 0)).size <= 4
    b5 = C.maximal_planar_set(F.bipyramid(5))
    assert b5.size == 3 and b5.bound == 5 and "bipyramid" in b5.notes
    with pytest.raises(NotMaximalPlanar):
        C.maximal_planar_set(F.wheel(5))


@pytest.mark.parametrize("rim", [3, 4, 7, 9, 12])
def test_maximal_planar_small_and_off_formula_bipyramids(rim):
    r = C.maximal_planar_set(F.bipyramid(rim))
    assert r.size == metric_dimension_exact(F.bipyramid(rim)).beta
    assert r.size <= 3 * (rim + 2) // 4


def test_bipyramid_set_examples():
    r5 = C.bipyramid_set(5)
    assert r5.members == (0, 2, 6) and r5.bound == 3  # a1, b1, b5
    assert C.bipyramid_set(10).size == 5
    assert C.bipyramid_dimension(5) == 3
    assert C.bipyramid_dimension(12) == 5
    with pytest.raises(DomainError):
        C.bipyramid_dimension(4)
    with pytest.raises(DomainError):
        C.bipyramid_set(4)


@pytest.mark.parametrize("n", [7, 9, 12])
def test_bipyramid_set_target_unreachable(n):
    # the exact solver shows floor(2n/5) + 1 is one too small when n = 2, 4 mod 5
    assert metric_dimension_exact(F.bipyramid(n)).beta == C.bipyramid_dimension(n) + 1
    with pytest.raises(RepairFailed) as info:
        C.bipyramid_set(n)
    assert len(info.value.best) == C.bipyramid_dimension(n) + 1


@pytest.mark.parametrize("n", range(5, 16))
def test_bipyramid_exact_values(n):
    beta = metric_dimension_exact(F.bipyramid(n)).beta
    assert beta == (2 * n + 2) // 5 + 1
    if n % 5 in (0, 1, 3):
        assert C.bipyramid_set(n).size == beta == C.bipyramid_dimension(n)


def test_bipyramid_candidate_indices():
    # b1, b5, b7, b10 plus a1 for n = 10
    assert C.bipyramid_candidate(10) == [0, 2, 6, 8, 11]


def _gaps(rim_positions, n):
    k = len(rim_positions)
    return [((rim_positions[(i + 1) % k] - rim_positions[i]) % n) or n for i in range(k)]


@pytest.mark.parametrize("n", range(5, 16))
def test_bipyramid_minimum_set_observations(n):
    g = F.bipyramid(n)
    for s in minimum_resolving_sets(g):
        assert 0 in s or 1 in s
        gaps = _gaps(sorted(v - 2 for v in s if v >= 2), n)
        assert max(gaps) <= 4
        assert gaps.count(4) <= 1
        assert not any(gaps[i] == gaps[(i + 1) % len(gaps)] == 3 for i in range(len(gaps)))


def test_reports_sound_and_never_beat_optimum(corpus):
    for g in corpus:
        if g.n > 11:
            continue
        beta = metric_dimension_exact(g).beta
        for method in C.applicable_methods(g):
            try:
                r = C.construct(g, method)
            except (VerificationFailed, BoundExceeded, RepairFailed):
                continue
            assert r.verified and is_resolving_set(g, None, r.members)
            assert beta <= r.size <= r.bound


def test_auto_order():
    assert C.construct(F.bipyramid(6), "auto").method == "bipyramid"
    assert C.construct(F.stacked_triangulation(7, 1), "auto").method == "maximal_planar"
    assert C.construct(F.cycle(7), "auto").method == "hamiltonian_outerplanar"
    r = C.construct(F.cycle(4), "auto")
    assert r.method == "outerplanar" and "auto skipped hamiltonian" in r.notes
    assert C.construct(F.wheel(5), "auto").method == "coloring"
    with pytest.raises(DomainError):
        C.construct(F.cycle(4), "magic")


def test_report_json():
    data = json.loads(C.bipyramid_set(5).to_json())
    assert data == {"method": "bipyramid", "set": [0, 2, 6], "bound": 3, "verified": True, "notes": ""}
