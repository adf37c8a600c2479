"""Symmetric core of a partition graph: axis, mediators, spine, filtrations.

The axis is the fixed-point set of conjugation (the self-conjugate
partitions). Two axis vertices interact when they share a common
neighbor; those common neighbors are mediators, and the spine is the
axis together with all mediators. Distances to the axis and to the
spine stratify the vertex set into shells.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import UNREACHABLE, PartitionGraph, bfs_distances


class AxislessGraphError(ValueError):
    """An axial quantity was requested for an n with an empty axis."""


AxialPair = tuple[int, int]


@dataclass(frozen=True, eq=False)
class AxialGeometry:
    """Axis-derived structure of one partition graph.

    For axisless n the axis is genuinely empty, but distances, spine and
    shells have no defined value; those fields are None rather than
    empty defaults so downstream consumers must handle the case
    explicitly.
    """

    n: int
    axis: frozenset[int]
    interaction_edges: frozenset[AxialPair]
    mediators: dict[AxialPair, frozenset[int]]
    spine: frozenset[int] | None
    ax_dist: tuple[int, ...] | None
    sp_dist: tuple[int, ...] | None
    ax_shells: tuple[int, ...] | None
    sp_shells: tuple[int, ...] | None

    @property
    def is_axial(self) -> bool:
        return bool(self.axis)

    def _require_axial(self) -> None:
        if not self.is_axial:
            raise AxislessGraphError(f"n={self.n} has no self-conjugate partition")


def compute_axis(g: PartitionGraph) -> frozenset[int]:
    """Fixed points of the conjugation permutation."""
    return frozenset(v for v in range(g.num_vertices) if g.conj[v] == v)


def interaction_graph(
    g: PartitionGraph, axis: frozenset[int]
) -> dict[AxialPair, frozenset[int]]:
    """Common-neighbor relation on the axis.

    Maps each unordered axis pair (a, b) with a < b to its nonempty set
    of mediators N(a) & N(b); non-interacting pairs are absent. Distinct
    axis vertices are never adjacent, so mediators are automatically
    off-axis (asserted, not filtered).
    """
    neighbor_sets = {a: set(g.adjacency[a]) for a in axis}
    pairs: dict[AxialPair, frozenset[int]] = {}
    for a, b in combinations(sorted(axis), 2):
        common = neighbor_sets[a] & neighbor_sets[b]
        if common:
            assert not (common & axis), f"axial mediator for pair ({a},{b})"
            pairs[(a, b)] = frozenset(common)
    return pairs


def compute_spine(
    axis: frozenset[int], mediators: dict[AxialPair, frozenset[int]]
) -> frozenset[int]:
    """Axis plus every mediator of an interacting axial pair."""
    spine = set(axis)
    for common in mediators.values():
        spine |= common
    return frozenset(spine)


def _shell_histogram(dist: tuple[int, ...]) -> tuple[int, ...]:
    top = max(dist)
    counts = [0] * (top + 1)
    for d in dist:
        if d != UNREACHABLE:
            counts[d] += 1
    return tuple(counts)


def axial_geometry(g: PartitionGraph) -> AxialGeometry:
    """Compute the full axial structure of g in one pass."""
    axis = compute_axis(g)
    if not axis:
        return AxialGeometry(
            n=g.n,
            axis=axis,
            interaction_edges=frozenset(),
            mediators={},
            spine=None,
            ax_dist=None,
            sp_dist=None,
            ax_shells=None,
            sp_shells=None,
        )
    mediators = interaction_graph(g, axis)
    spine = compute_spine(axis, mediators)
    ax_dist = tuple(bfs_distances(g, axis))
    sp_dist = tuple(bfs_distances(g, spine))
    return AxialGeometry(
        n=g.n,
        axis=axis,
        interaction_edges=frozenset(mediators),
        mediators=mediators,
        spine=spine,
        ax_dist=ax_dist,
        sp_dist=sp_dist,
        ax_shells=_shell_histogram(ax_dist),
        sp_shells=_shell_histogram(sp_dist),
    )


def central_region(geometry: AxialGeometry, r: int) -> frozenset[int]:
    """Vertices within distance r of the axis; r=0 gives the axis itself."""
    geometry._require_axial()
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    return frozenset(v for v, d in enumerate(geometry.ax_dist) if 0 <= d <= r)


def thick_spine(geometry: AxialGeometry, r: int) -> frozenset[int]:
    """Vertices within distance r of the spine; r=0 gives the spine itself."""
    geometry._require_axial()
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    return frozenset(v for v, d in enumerate(geometry.sp_dist) if 0 <= d <= r)


def shell_counts(geometry: AxialGeometry) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertex counts at each exact axial / spinal distance.

    Returned as dense arrays indexed by distance k; prefix sums recover
    the sizes of the central regions and thick spines.
    """
    geometry._require_axial()
    return geometry.ax_shells, geometry.sp_shells
