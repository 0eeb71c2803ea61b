"""Exact metric dimension of small graphs and constructive upper bounds
for outerplanar graphs, triangulations and bipyramids."""
from .constructions import (
    ConstructionReport,
    bipyramid_dimension,
    bipyramid_set,
    coloring_bound_set,
    construct,
    hamiltonian_outerplanar_set,
    maximal_planar_set,
    outerplanar_set,
)
from .estimator import ResolvingSetSelector
from .families import FamilySpec, conjecture_corpus, generate
from .graph import DistanceMatrix, Graph, all_pairs_distances, biconnected_components, build_graph
from .metric import (
    alike_lower_bound,
    alike_partition,
    is_resolving_set,
    metric_dimension_exact,
    resolved_vertices,
)

__all__ = [
    "ConstructionReport",
    "DistanceMatrix",
    "FamilySpec",
    "Graph",
    "ResolvingSetSelector",
    "alike_lower_bound",
    "alike_partition",
    "all_pairs_distances",
    "biconnected_components",
    "bipyramid_dimension",
    "bipyramid_set",
    "build_graph",
    "coloring_bound_set",
    "conjecture_corpus",
    "construct",
    "generate",
    "hamiltonian_outerplanar_set",
    "is_resolving_set",
    "maximal_planar_set",
    "metric_dimension_exact",
    "outerplanar_set",
    "resolved_vertices",
]
