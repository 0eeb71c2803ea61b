import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from resolvedim import ResolvingSetSelector
from resolvedim import families as F
from resolvedim.graph import graph_to_dict


def test_fit_transform_predict_roundtrip():
    g = F.bipyramid(6)
    sel = ResolvingSetSelector().fit(g)
    assert sel.dimension_ == 3 and sel.lower_bound_ == 1
    emb = sel.transform()
    assert emb.shape == (g.n, 3)
    assert len({tuple(r) for r in emb.tolist()}) == g.n
    assert sel.predict(emb).tolist() == list(range(g.n))
    assert sel.predict([[9, 9, 9]]).tolist() == [-1]


def test_transform_subset_and_fit_transform():
    g = F.cycle(7)
    sel = ResolvingSetSelector()
    full = sel.fit_transform(g)
    assert np.array_equal(sel.transform([3, 0]), full[[3, 0]])


def test_adjacency_and_json_inputs():
    g = F.cycle(5)
    A = np.zeros((5, 5), dtype=int)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    a = ResolvingSetSelector().fit(A)
    b = ResolvingSetSelector().fit(graph_to_dict(g))
    assert a.landmarks_.tolist() == b.landmarks_.tolist() == [0, 1]


@pytest.mark.parametrize("bad", [
    np.array([[0, 1], [0, 0]]),
    np.array([[1, 1], [1, 0]]),
    np.array([[0, 2], [2, 0]]),
    np.zeros((2, 3)),
])
def test_adjacency_validation(bad):
    with pytest.raises(ValueError):
        ResolvingSetSelector().fit(bad)


def test_construction_methods():
    g = F.stacked_triangulation(9, 2)
    sel = ResolvingSetSelector(method="maxplanar").fit(g)
    assert sel.report_.verified and sel.dimension_ <= 3 * 9 // 4
    assert ResolvingSetSelector(method="auto").fit(F.cycle(8)).dimension_ == 4


def test_params_and_clone():
    sel = ResolvingSetSelector(method="coloring", budget=1000)
    assert sel.get_params() == {"method": "coloring", "budget": 1000}
    twin = clone(sel).set_params(method="exact")
    assert twin.method == "exact" and sel.method == "coloring"
    with pytest.raises(ValueError):
        ResolvingSetSelector(method="nope").fit(F.path(3))


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ResolvingSetSelector().transform()


def test_predict_shape_check():
    sel = ResolvingSetSelector().fit(F.path(4))
    with pytest.raises(ValueError):
        sel.predict([[0, 1]])
