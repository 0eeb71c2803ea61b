import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from resolvedim import families as F
from resolvedim.exceptions import BadCertificate, Disconnected, DuplicateEdge, SelfLoop, VertexOutOfRange
from resolvedim.graph import (
    all_pairs_distances,
    biconnected_components,
    build_graph,
    dumps_graph,
    graph_from_dict,
    load_graph,
    save_graph,
)

from .conftest import connected_graphs


def relaxation_distances(g):
    """Oracle: repeated edge relaxation until nothing changes."""
    inf = g.n + 1
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    changed = True
    while changed:
        changed = False
        for u, v in g.edges:
            for s in range(g.n):
                for a, b in ((u, v), (v, u)):
                    if d[s][a] + 1 < d[s][b]:
                        d[s][b] = d[s][a] + 1
                        changed = True
    return d


def test_build_path_and_cycle():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert p3.n == 3 and p3.edges == {(0, 1), (1, 2)}
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.m == 4 and all(c4.degree(v) == 2 for v in range(4))


def test_build_errors_name_offender():
    with pytest.raises(Disconnected, match="vertex 3"):
        build_graph(4, [(0, 1), (1, 2)])
    with pytest.raises(SelfLoop, match="vertex 1"):
        build_graph(2, [(0, 1), (1, 1)])
    with pytest.raises(DuplicateEdge, match=r"\(0, 1\)"):
        build_graph(2, [(0, 1), (1, 0)])
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(0, 2)])
    with pytest.raises(BadCertificate, match="not an edge"):
        build_graph(4, [(0, 1), (1, 2), (2, 3)], {"outer_cycle": [0, 1, 2, 3]})
    with pytest.raises(BadCertificate, match="non-edge"):
        build_graph(3, [(0, 1), (1, 2)], {"faces": [[0, 1, 2]]})
    with pytest.raises(BadCertificate, match="permutation"):
        build_graph(3, [(0, 1), (1, 2), (0, 2)], {"outer_cycle": [0, 1, 1]})


def test_single_vertex():
    g = build_graph(1, [])
    assert g.distances.d.tolist() == [[0]]


def test_distance_rows():
    assert all_pairs_distances(F.path(3)).row(0) == [0, 1, 2]
    assert all_pairs_distances(F.cycle(4)).row(0) == [0, 1, 2, 1]
    d = all_pairs_distances(F.bipyramid(5)).d
    off = d[~np.eye(7, dtype=bool)]
    assert set(off.tolist()) <= {1, 2}


def test_distance_matrix_read_only():
    d = F.cycle(5).distances.d
    with pytest.raises(ValueError):
        d[0, 1] = 7


def test_distances_match_relaxation(corpus):
    for g in corpus:
        if g.n <= 10:
            assert g.distances.d.tolist() == relaxation_distances(g), g


@given(connected_graphs(max_n=10))
@settings(max_examples=60, deadline=None)
def test_distance_invariants(g):
    d = g.distances.d
    assert (np.diag(d) == 0).all()
    assert (d == d.T).all()
    adjacent = d == 1
    for u in range(g.n):
        for v in range(g.n):
            assert adjacent[u, v] == g.has_edge(u, v)
    for w in range(g.n):
        assert (d <= d[:, [w]] + d[[w], :]).all()


def test_blocks_examples():
    c5 = biconnected_components(F.cycle(5))
    assert len(c5.blocks) == 1 and c5.cut_vertices == ()
    p4 = biconnected_components(F.path(4))
    assert len(p4.blocks) == 3 and p4.cut_vertices == (1, 2)
    bowtie = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    dec = biconnected_components(bowtie)
    assert [b.vertices for b in dec.blocks] == [(0, 1, 2), (2, 3, 4)]
    assert dec.cut_vertices == (2,)


def _check_blocks(g):
    dec = biconnected_components(g)
    edges = [e for b in dec.blocks for e in b.edges]
    assert sorted(edges) == g.sorted_edges()
    shared = set()
    for i, a in enumerate(dec.blocks):
        for b in dec.blocks[i + 1:]:
            common = set(a.vertices) & set(b.vertices)
            assert len(common) <= 1
            shared |= common
    assert shared == set(dec.cut_vertices)
    # networkx as an independent oracle
    ng = nx.Graph(list(g.edges))
    ng.add_nodes_from(range(g.n))
    if g.n > 1:
        assert sorted(tuple(sorted(c)) for c in nx.biconnected_components(ng)) == [b.vertices for b in dec.blocks]
        assert set(nx.articulation_points(ng)) == set(dec.cut_vertices)


def test_blocks_on_corpus(corpus):
    for g in corpus:
        _check_blocks(g)


@given(connected_graphs(min_n=2, max_n=12))
@settings(max_examples=80, deadline=None)
def test_blocks_property(g):
    _check_blocks(g)


def test_json_roundtrip(tmp_path):
    g = F.max_outerplanar(7, seed=3)
    path = tmp_path / "g.json"
    save_graph(g, path)
    back = load_graph(path)
    assert back == g
    assert back.certificates == g.certificates
    data = json.loads(dumps_graph(F.bipyramid(4)))
    assert set(data) == {"n", "edges", "certificates"}
    assert data["certificates"]["family"] == {"name": "bipyramid", "params": {"n": 4}}
    assert len(data["certificates"]["faces"]) == 8


def test_json_field_order_and_optional_certificates():
    g = graph_from_dict({"edges": [[1, 0], [2, 1]], "n": 3})
    assert g.edges == {(0, 1), (1, 2)} and g.certificates == {}
