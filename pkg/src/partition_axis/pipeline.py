"""One-stop per-n analysis: graph, axial geometry, invariant profiles.

Everything downstream (reports, exports, verification) consumes this
bundle. Results are memoized per n since all components are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .axial import AxialGeometry, axial_geometry
from .graph import PartitionGraph, build_graph
from .invariants import InvariantProfile, all_profiles


@dataclass(frozen=True, eq=False)
class GraphAnalysis:
    graph: PartitionGraph
    geometry: AxialGeometry
    profiles: dict[str, InvariantProfile]

    @property
    def n(self) -> int:
        return self.graph.n


@lru_cache(maxsize=None)
def analyze(n: int) -> GraphAnalysis:
    g = build_graph(n)
    geometry = axial_geometry(g)
    return GraphAnalysis(graph=g, geometry=geometry, profiles=all_profiles(g, geometry))
