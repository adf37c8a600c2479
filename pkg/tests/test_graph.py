import pytest

from partition_axis import UNREACHABLE, bfs_distances, build_graph, degree


def test_rejects_invalid_n():
    with pytest.raises(ValueError):
        build_graph(0)


def test_n1_single_isolated_vertex():
    g = build_graph(1)
    assert g.vertices == ((1,),)
    assert g.adjacency == ((),)
    assert g.conj == (0,)


def test_n2_conjugate_pair():
    g = build_graph(2)
    assert g.num_vertices == 2
    assert g.num_edges == 1
    assert g.conj == (1, 0)
    assert g.adjacency == ((1,), (0,))


def test_vertices_in_enumeration_order_with_index():
    g = build_graph(6)
    for i, parts in enumerate(g.vertices):
        assert g.vertex_id(parts) == i


def test_adjacency_sorted_symmetric_irreflexive():
    for n in range(1, 13):
        g = build_graph(n)
        for u, row in enumerate(g.adjacency):
            assert list(row) == sorted(row)
            assert u not in row
            for v in row:
                assert u in g.adjacency[v]


def test_conj_is_involutive_automorphism():
    for n in range(1, 13):
        g = build_graph(n)
        assert [g.conj[g.conj[v]] for v in range(g.num_vertices)] == list(range(g.num_vertices))
        neighbor_sets = [set(row) for row in g.adjacency]
        for u, row in enumerate(g.adjacency):
            for v in row:
                assert g.conj[v] in neighbor_sets[g.conj[u]]


def test_max_degree_n10():
    g = build_graph(10)
    assert max(len(row) for row in g.adjacency) == 12


def test_degree_examples():
    g = build_graph(1)
    assert degree(g, 0) == 0

    g6 = build_graph(6)
    degs = [degree(g6, v) for v in range(g6.num_vertices)]
    assert max(degs) == 6
    assert degs.count(6) == 1


class TestBfs:
    def test_all_sources_all_zero(self):
        g = build_graph(6)
        assert bfs_distances(g, range(g.num_vertices)) == [0] * g.num_vertices

    def test_three_vertex_path(self):
        g = build_graph(3)
        mid = g.vertex_id((2, 1))
        dist = bfs_distances(g, [mid])
        assert dist[mid] == 0
        assert dist[g.vertex_id((3,))] == 1
        assert dist[g.vertex_id((1, 1, 1))] == 1

    def test_empty_sources_all_unreachable(self):
        g = build_graph(5)
        dist = bfs_distances(g, [])
        assert dist == [UNREACHABLE] * g.num_vertices
        assert 0 not in dist

    def test_triangle_inequality_on_edges(self):
        g = build_graph(9)
        dist = bfs_distances(g, [0])
        for u, row in enumerate(g.adjacency):
            for v in row:
                assert abs(dist[u] - dist[v]) <= 1

    def test_conj_invariant_for_conj_invariant_sources(self):
        for n in range(3, 13):
            g = build_graph(n)
            axis = [v for v in range(g.num_vertices) if g.conj[v] == v]
            if not axis:
                continue
            dist = bfs_distances(g, axis)
            for v in range(g.num_vertices):
                assert dist[v] == dist[g.conj[v]]


def test_degree_sum_is_twice_edge_count():
    for n in range(1, 13):
        g = build_graph(n)
        assert sum(len(row) for row in g.adjacency) == 2 * g.num_edges
