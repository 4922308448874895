"""Exact flip distances and diameter tables for convex polygon triangulations."""

from .errors import (
    FlipSequenceError,
    InvalidInputError,
    ResourceBudgetError,
    SizeError,
)
from .polygon import (
    Edge,
    FlipPath,
    Triangulation,
    TriangulationPair,
    apply_flips,
    canonical_key,
    crosses,
    fan,
    flip,
    link,
    pair_dihedral_class,
    uniform_random,
)
from .deletion import delete_seq, delete_vertex, is_incident, project_path, quotient_graph, theta
from .families import comb_teeth, family_a, family_b, family_c, family_d, is_zigzag, zigzag
from .flipgraph import (
    bfs_distances,
    check_prefix_theorem,
    diameter,
    enumerate_triangulations,
    geodesic_dag,
)
from .distance import decompose, fan_upper_bound, flip_distance, reduce_forced

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "FlipPath",
    "FlipSequenceError",
    "InvalidInputError",
    "ResourceBudgetError",
    "SizeError",
    "Triangulation",
    "TriangulationPair",
    "apply_flips",
    "bfs_distances",
    "canonical_key",
    "check_prefix_theorem",
    "comb_teeth",
    "crosses",
    "decompose",
    "delete_seq",
    "delete_vertex",
    "diameter",
    "enumerate_triangulations",
    "fan",
    "fan_upper_bound",
    "family_a",
    "family_b",
    "family_c",
    "family_d",
    "flip",
    "flip_distance",
    "geodesic_dag",
    "is_incident",
    "is_zigzag",
    "link",
    "pair_dihedral_class",
    "project_path",
    "quotient_graph",
    "reduce_forced",
    "theta",
    "uniform_random",
    "zigzag",
]
