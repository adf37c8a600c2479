"""Partition transfer graphs and their conjugation-symmetric core."""

__version__ = "0.1.0"

from .axial import (
    AxialGeometry,
    AxislessGraphError,
    axial_geometry,
    central_region,
    compute_axis,
    compute_spine,
    interaction_graph,
    shell_counts,
    thick_spine,
)
from .graph import UNREACHABLE, PartitionGraph, bfs_distances, build_graph, degree
from .invariants import (
    INVARIANTS,
    InvariantProfile,
    OracleInfeasibleError,
    all_profiles,
    argmax_symmetry_check,
    local_clique_number,
    local_clique_number_oracle,
    profile,
)
from .partitions import (
    Corner,
    Partition,
    conjugate,
    corners,
    enumerate_partitions,
    format_partition,
    is_self_conjugate,
    iter_partitions,
    parse_partition,
    transfer_neighbors,
)
from .pipeline import GraphAnalysis, analyze

__all__ = [
    "AxialGeometry",
    "AxislessGraphError",
    "Corner",
    "GraphAnalysis",
    "INVARIANTS",
    "InvariantProfile",
    "OracleInfeasibleError",
    "Partition",
    "PartitionGraph",
    "UNREACHABLE",
    "all_profiles",
    "analyze",
    "argmax_symmetry_check",
    "axial_geometry",
    "bfs_distances",
    "build_graph",
    "central_region",
    "compute_axis",
    "compute_spine",
    "conjugate",
    "corners",
    "degree",
    "enumerate_partitions",
    "format_partition",
    "interaction_graph",
    "is_self_conjugate",
    "iter_partitions",
    "local_clique_number",
    "local_clique_number_oracle",
    "parse_partition",
    "profile",
    "shell_counts",
    "thick_spine",
    "transfer_neighbors",
]
