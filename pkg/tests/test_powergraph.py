"""Power graph construction, complement, deletion and components."""

import pytest

from lambda_power import (
    Graph,
    build_power_graph,
    complement,
    connected_components,
    delete_vertex,
    diameter_at_most_two,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
)


def pg(group):
    return build_power_graph(group)


def test_z6_adjacency():
    graph = pg(make_cyclic(6))
    assert not graph.adjacent(2, 3)
    assert not graph.adjacent(3, 4)
    assert graph.adjacent(2, 4)
    assert all(graph.adjacent(0, v) for v in range(1, 6))


def test_prime_power_cyclic_is_complete():
    for n in (2, 3, 4, 8, 9, 16):
        graph = pg(make_cyclic(n))
        assert graph.edge_count() == n * (n - 1) // 2


def test_klein_four_is_star():
    graph = pg(direct_product(make_cyclic(2), make_cyclic(2)))
    assert sorted(graph.degree(v) for v in range(4)) == [1, 1, 1, 3]
    assert graph.degree(0) == 3


def test_complement_of_complete_is_empty():
    graph = complement(pg(make_cyclic(4)))
    assert graph.edge_count() == 0


def test_complement_involution():
    graph = pg(make_dihedral(6))
    assert complement(complement(graph)).adj == graph.adj


def test_z6_complement_edges():
    graph = complement(pg(make_cyclic(6)))
    assert graph.edges() == [(2, 3), (3, 4)]


def test_identity_isolated_in_complement():
    for group in (make_cyclic(6), make_dihedral(8), make_generalized_quaternion(8)):
        comp = complement(pg(group))
        assert comp.degree(0) == 0


def test_edge_count_identity():
    for group in (make_cyclic(12), make_dihedral(10), make_generalized_quaternion(12)):
        graph = pg(group)
        n = graph.n
        assert graph.edge_count() + complement(graph).edge_count() == n * (n - 1) // 2


def test_delete_identity_from_klein_star():
    graph = pg(direct_product(make_cyclic(2), make_cyclic(2)))
    reduced, survivors = delete_vertex(graph, 0)
    assert reduced.edge_count() == 0
    assert survivors == (1, 2, 3)


def test_delete_vertex_from_complete():
    reduced, _ = delete_vertex(pg(make_cyclic(4)), 2)
    assert reduced.n == 3
    assert reduced.edge_count() == 3


def test_delete_vertex_survivor_indices():
    graph = pg(make_dihedral(6))
    reduced, survivors = delete_vertex(graph, 0)
    comps = connected_components(reduced)
    assert [len(c) for c in comps] == [2, 1, 1, 1]
    # the one nontrivial component is the rotations, in original indices 1, 2
    assert sorted(survivors[v] for v in comps[0]) == [1, 2]


def test_delete_vertex_range_check():
    with pytest.raises(ValueError):
        delete_vertex(pg(make_cyclic(4)), 4)


def test_components_connected_graph():
    assert len(connected_components(pg(make_cyclic(12)))) == 1


def test_q8_minus_identity_stays_connected():
    graph = pg(make_generalized_quaternion(8))
    reduced, _ = delete_vertex(graph, 0)
    assert [len(c) for c in connected_components(reduced)] == [7]


def test_dihedral_minus_identity_component_count():
    for k in (3, 4, 5, 6):
        graph = pg(make_dihedral(2 * k))
        reduced, _ = delete_vertex(graph, 0)
        assert len(connected_components(reduced)) == k + 1


def test_diameter_at_most_two():
    assert diameter_at_most_two(pg(make_cyclic(12)))
    assert diameter_at_most_two(pg(make_dihedral(10)))
    path4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert not diameter_at_most_two(path4)
    assert diameter_at_most_two(Graph.from_edges(1, []))


def test_graph_validation():
    from lambda_power import InternalError
    with pytest.raises(InternalError):
        Graph((0b10, 0b00))  # asymmetric
    with pytest.raises(InternalError):
        Graph((0b01,))  # self-loop


def test_from_edges_rejects_bad_edge():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
