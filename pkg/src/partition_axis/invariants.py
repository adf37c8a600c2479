"""Local vertex invariants and where their maximizers sit.

Three invariants are tracked: vertex degree, the local clique number
(size of the largest clique through the vertex), and the local
dimension (clique number minus one). For each one we record the
maximizer set and the smallest axial / spinal radii enclosing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .axial import AxialGeometry
from .graph import UNREACHABLE, PartitionGraph

DEG = "deg"
OMEGA_LOC = "omega_loc"
DIM_LOC = "dim_loc"
INVARIANTS = (DEG, OMEGA_LOC, DIM_LOC)

ORACLE_DEGREE_LIMIT = 25


class OracleInfeasibleError(ValueError):
    """Vertex degree exceeds the brute-force subset enumeration bound."""


@dataclass(frozen=True, eq=False)
class InvariantProfile:
    invariant_id: str
    values: tuple[int, ...]
    max_value: int
    argmax: frozenset[int]
    rho_ax: int | None
    rho_sp: int | None


def _max_clique_size(candidates: set[int], adj: dict[int, set[int]]) -> int:
    """Largest clique among ``candidates``, by pivoted branch enumeration."""
    best = 0

    def expand(size: int, p: set[int], x: set[int]) -> None:
        nonlocal best
        if not p and not x:
            if size > best:
                best = size
            return
        pivot = max(p | x, key=lambda u: len(p & adj[u]))
        for v in list(p - adj[pivot]):
            expand(size + 1, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(0, set(candidates), set())
    return best


def local_clique_number(g: PartitionGraph, v: int) -> int:
    """1 + the clique number of the subgraph induced on N(v).

    Isolated vertices score 1 (the vertex alone is its largest clique).
    """
    neighborhood = g.adjacency[v]
    if not neighborhood:
        return 1
    members = set(neighborhood)
    induced = {u: set(g.adjacency[u]) & members for u in neighborhood}
    return 1 + _max_clique_size(members, induced)


def local_clique_number_oracle(g: PartitionGraph, v: int) -> int:
    """Same value as local_clique_number, by checking every subset of N(v).

    Subsets are tried in increasing size; once no subset of size k is a
    clique, no larger one can be, so the scan stops. Only feasible for
    small degrees.
    """
    neighborhood = g.adjacency[v]
    if len(neighborhood) > ORACLE_DEGREE_LIMIT:
        raise OracleInfeasibleError(
            f"deg={len(neighborhood)} exceeds oracle bound {ORACLE_DEGREE_LIMIT}"
        )
    adj = {u: set(g.adjacency[u]) for u in neighborhood}
    best = 0
    for k in range(1, len(neighborhood) + 1):
        found = False
        for subset in combinations(neighborhood, k):
            if all(b in adj[a] for a, b in combinations(subset, 2)):
                found = True
                break
        if not found:
            break
        best = k
    return 1 + best


def degree_values(g: PartitionGraph) -> tuple[int, ...]:
    return tuple(len(a) for a in g.adjacency)


def omega_loc_values(g: PartitionGraph) -> tuple[int, ...]:
    return tuple(local_clique_number(g, v) for v in range(g.num_vertices))


def _enclosing_radius(argmax: frozenset[int], dist: tuple[int, ...]) -> int | None:
    # Smallest r whose distance ball contains all maximizers: the max
    # distance over the set. No finite r exists if any is unreachable.
    radius = max(dist[v] for v in argmax)
    return None if radius == UNREACHABLE else radius


def _build_profile(
    invariant_id: str, values: tuple[int, ...], geometry: AxialGeometry
) -> InvariantProfile:
    max_value = max(values)
    argmax = frozenset(v for v, x in enumerate(values) if x == max_value)
    if geometry.is_axial:
        rho_ax = _enclosing_radius(argmax, geometry.ax_dist)
        rho_sp = _enclosing_radius(argmax, geometry.sp_dist)
    else:
        rho_ax = rho_sp = None
    return InvariantProfile(invariant_id, values, max_value, argmax, rho_ax, rho_sp)


def profile(
    g: PartitionGraph, geometry: AxialGeometry, invariant_id: str
) -> InvariantProfile:
    """Values, maximizer set and concentration radii for one invariant.

    Radii are None for axisless n; values and argmax are still produced.
    """
    if invariant_id == DEG:
        values = degree_values(g)
    elif invariant_id == OMEGA_LOC:
        values = omega_loc_values(g)
    elif invariant_id == DIM_LOC:
        values = tuple(x - 1 for x in omega_loc_values(g))
    else:
        raise ValueError(f"unknown invariant {invariant_id!r}")
    return _build_profile(invariant_id, values, geometry)


def all_profiles(
    g: PartitionGraph, geometry: AxialGeometry
) -> dict[str, InvariantProfile]:
    """All three profiles, computing the clique values only once."""
    omega = omega_loc_values(g)
    return {
        DEG: _build_profile(DEG, degree_values(g), geometry),
        OMEGA_LOC: _build_profile(OMEGA_LOC, omega, geometry),
        DIM_LOC: _build_profile(DIM_LOC, tuple(x - 1 for x in omega), geometry),
    }


def argmax_symmetry_check(prof: InvariantProfile, g: PartitionGraph) -> bool:
    """Conjugation closure of the maximizer set, plus the parity rule.

    True iff conjugation maps the argmax onto itself and, when the
    argmax has odd size, at least one maximizer is self-conjugate.
    """
    argmax = prof.argmax
    if frozenset(g.conj[v] for v in argmax) != argmax:
        return False
    if len(argmax) % 2 == 1 and not any(g.conj[v] == v for v in argmax):
        return False
    return True
