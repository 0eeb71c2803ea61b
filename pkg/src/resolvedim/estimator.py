"""scikit-learn style wrapper: fit a landmark (resolving) set on a graph,
embed vertices as distance vectors, and locate vertices from them."""
from __future__ import annotations

from typing import Any, Mapping

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import constructions
from .graph import Graph, build_graph, graph_from_dict
from .metric import alike_lower_bound, metric_dimension_exact

_METHODS = ("exact", "auto", "hamiltonian", "coloring", "outerplanar", "maxplanar", "bipyramid")


def check_graph(X: Any) -> Graph:
    """Accept a :class:`Graph`, a graph JSON mapping, or a square 0/1
    symmetric adjacency matrix with zero diagonal."""
    if isinstance(X, Graph):
        return X
    if isinstance(X, Mapping):
        return graph_from_dict(X)
    A = check_array(X, dtype=None, ensure_2d=True)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    if not (A == A.T).all():
        raise ValueError("adjacency matrix must be symmetric")
    if np.diag(A).any():
        raise ValueError("adjacency matrix must have a zero diagonal")
    rows, cols = np.nonzero(np.triu(A, 1))
    return build_graph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def check_vertices(X: Any, n: int) -> np.ndarray:
    idx = check_array(np.asarray(X).reshape(-1, 1), dtype=np.int64).ravel()
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise ValueError(f"vertex indices must lie in 0..{n - 1}")
    return idx


class ResolvingSetSelector(TransformerMixin, BaseEstimator, auto_wrap_output_keys=None):
    """Choose landmarks so every vertex has a unique distance vector.

    Parameters
    ----------
    method : {"exact", "auto", "hamiltonian", "coloring", "outerplanar", "maxplanar", "bipyramid"}
        ``"exact"`` finds a minimum resolving set; the others run the
        corresponding bound construction.
    budget : int or None
        Search node budget for the exact solver and colorings.

    Attributes
    ----------
    landmarks_ : ndarray of shape (k,)
    dimension_ : int
        Size of the fitted landmark set.
    lower_bound_ : int
        n - s, the alike-class lower bound.
    report_ : ConstructionReport or None
    """

    def __init__(self, method: str = "exact", budget: int | None = None):
        self.method = method
        self.budget = budget

    def fit(self, X, y=None):
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got {self.method!r}")
        g = check_graph(X)
        self.report_ = None
        if self.method == "exact":
            members = metric_dimension_exact(g, self.budget).witness
        else:
            self.report_ = constructions.construct(g, self.method, self.budget)
            members = self.report_.members
        self.graph_ = g
        self.n_vertices_ = g.n
        self.landmarks_ = np.asarray(members, dtype=np.int64)
        self.dimension_ = len(members)
        self.lower_bound_ = alike_lower_bound(g).value
        self.embedding_ = np.asarray(g.distances.d[:, self.landmarks_], dtype=np.int64)
        self._lookup = {tuple(row): v for v, row in enumerate(self.embedding_.tolist())}
        return self

    def transform(self, X=None):
        """Distance vectors to the landmarks for the given vertex indices
        (all vertices when ``X`` is None)."""
        check_is_fitted(self, "landmarks_")
        if X is None:
            return self.embedding_.copy()
        return self.embedding_[check_vertices(X, self.n_vertices_)]

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform()

    def predict(self, X):
        """Vertex index for each row of distance vectors, -1 if none matches."""
        check_is_fitted(self, "landmarks_")
        V = check_array(X, dtype=np.int64, ensure_min_features=0)
        if V.shape[1] != self.dimension_:
            raise ValueError(f"expected {self.dimension_} distances per row, got {V.shape[1]}")
        return np.array([self._lookup.get(tuple(row), -1) for row in V.tolist()], dtype=np.int64)

