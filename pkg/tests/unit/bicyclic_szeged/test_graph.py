# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Graph core unit tests."""

import itertools
import logging

import networkx
import pytest

from bicyclic_szeged.src import constructions, graph
from bicyclic_szeged.src.graph import Graph


def test_from_edges_orders_edges() -> None:
    """
    arrange: an edge list in arbitrary order and orientation.
    act: build the graph.
    assert: edges come back normalized and sorted, with the right counts.
    """
    g = Graph.from_edges(4, [(3, 2), (0, 1), (2, 0)])

    assert g.edges == ((0, 1), (0, 2), (2, 3))
    assert g.m == 3
    assert g.degrees() == (2, 1, 2, 1)
    assert g.neighbors(0) == [1, 2]
    assert g.has_edge(2, 3) and g.has_edge(3, 2)
    assert not g.has_edge(1, 3)


@pytest.mark.parametrize(
    "edges, error",
    [
        pytest.param([(0, 0)], graph.InvalidGraphError, id="self-loop"),
        pytest.param([(0, 1), (1, 0)], graph.InvalidGraphError, id="parallel edge"),
        pytest.param([(0, 3)], graph.VertexOutOfRangeError, id="out of range"),
    ],
)
def test_from_edges_rejects_invalid_edges(edges, error) -> None:
    """
    arrange: an edge list that is not a simple graph on 3 vertices.
    act: build the graph.
    assert: the matching error is raised.
    """
    with pytest.raises(error):
        Graph.from_edges(3, edges)


def test_asymmetric_adjacency_rejected() -> None:
    """
    arrange: adjacency bit sets where 0 lists 1 but 1 does not list 0.
    act: build the graph.
    assert: InvalidGraphError is raised.
    """
    with pytest.raises(graph.InvalidGraphError):
        Graph(n=2, adjacency=(0b10, 0b00))


def test_size_limit() -> None:
    """
    arrange: none.
    act: build a graph with more vertices than supported.
    assert: SizeLimitError is raised.
    """
    with pytest.raises(graph.SizeLimitError):
        Graph(n=graph.MAX_VERTICES + 1, adjacency=(0,) * (graph.MAX_VERTICES + 1))


def test_edit_operations() -> None:
    """
    arrange: the path 0-1-2.
    act: add a vertex, add an edge, remove an edge and relabel.
    assert: each operation returns the expected new graph and leaves the input intact.
    """
    path = Graph.from_edges(3, [(0, 1), (1, 2)])

    assert path.add_vertex([2]).edges == ((0, 1), (1, 2), (2, 3))
    assert path.add_edge(0, 2).m == 3
    assert path.remove_edge(1, 0).edges == ((1, 2),)
    assert path.relabel([1, 0, 2]).edges == ((0, 1), (0, 2))
    assert path.edges == ((0, 1), (1, 2))
    with pytest.raises(graph.EdgeNotFoundError):
        path.remove_edge(0, 2)
    with pytest.raises(graph.InvalidGraphError):
        path.relabel([0, 0, 1])


def test_bfs_distances_on_path() -> None:
    """
    arrange: the path 0-1-2-3 plus an isolated vertex 4.
    act: compute distances from vertex 0.
    assert: hop counts along the path and UNREACHABLE for the isolated vertex.
    """
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)])

    assert graph.bfs_distances(g, 0) == (0, 1, 2, 3, graph.UNREACHABLE)
    with pytest.raises(graph.VertexOutOfRangeError):
        graph.bfs_distances(g, 5)


def test_all_pairs_distances_match_networkx(random_connected_graphs, to_networkx) -> None:
    """
    arrange: random connected graphs.
    act: compute the distance matrix.
    assert: it matches the networkx shortest path lengths.
    """
    for g in random_connected_graphs[:200]:
        distances = graph.all_pairs_distances(g)
        expected = dict(networkx.all_pairs_shortest_path_length(to_networkx(g)))
        assert all(
            distances[u][v] == expected[u][v] for u in range(g.n) for v in range(g.n)
        )


@pytest.mark.parametrize(
    "g, connected",
    [
        pytest.param(Graph(n=0, adjacency=()), True, id="empty"),
        pytest.param(Graph(n=1, adjacency=(0,)), True, id="single vertex"),
        pytest.param(Graph(n=2, adjacency=(0, 0)), False, id="two isolated vertices"),
        pytest.param(Graph.from_edges(3, [(0, 2), (1, 2)]), True, id="path"),
    ],
)
def test_is_connected(g, connected) -> None:
    """
    arrange: small graphs.
    act: check connectivity.
    assert: the expected answer, vacuously true for n <= 1.
    """
    assert graph.is_connected(g) is connected


def test_degree_helpers() -> None:
    """
    arrange: B_6.
    act: read the minimum degree and the degree sequence.
    assert: two vertices of degree 3, four of degree 2.
    """
    bn = constructions.build_bn(6)

    assert graph.min_degree(bn) == 2
    assert graph.degree_sequence(bn) == (3, 3, 2, 2, 2, 2)
    assert graph.min_degree(Graph(n=0, adjacency=())) == 0


@pytest.mark.parametrize(
    "g, cuts",
    [
        pytest.param(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), {1, 2}, id="path"),
        pytest.param(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), set(), id="cycle"),
        pytest.param(constructions.build_dumbbell(3, 3, 0), {0}, id="bowtie"),
        pytest.param(constructions.build_dumbbell(3, 3, 1), {0, 3}, id="dumbbell"),
        pytest.param(Graph.from_edges(2, [(0, 1)]), set(), id="single edge"),
    ],
)
def test_cut_vertices(g, cuts) -> None:
    """
    arrange: graphs with known articulation points.
    act: find the cut vertices.
    assert: they match.
    """
    assert graph.cut_vertices(g) == cuts


def test_cut_vertices_disconnected() -> None:
    """
    arrange: two disjoint edges.
    act: find the cut vertices.
    assert: NotConnectedError is raised.
    """
    with pytest.raises(graph.NotConnectedError):
        graph.cut_vertices(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_cut_vertices_match_oracles(random_connected_graphs, to_networkx) -> None:
    """
    arrange: random connected graphs.
    act: find the cut vertices.
    assert: they match networkx and, for small graphs, brute-force vertex deletion.
    """
    for g in random_connected_graphs[:300]:
        cuts = graph.cut_vertices(g)
        assert cuts == set(networkx.articulation_points(to_networkx(g)))
        assert graph.is_two_connected(g) == (g.n >= 3 and not cuts)
        if g.n > 10:
            continue
        for v in range(g.n):
            rest = to_networkx(g)
            rest.remove_node(v)
            disconnects = rest.number_of_nodes() > 0 and not networkx.is_connected(rest)
            assert (v in cuts) == disconnects


def test_shortest_cycle_through_edge() -> None:
    """
    arrange: C5, K4 and a graph with a bridge.
    act: measure the shortest cycle through an edge.
    assert: 5 on C5, 3 on K4, BridgeEdgeError on the bridge.
    """
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    k4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
    dumbbell = constructions.build_dumbbell(3, 3, 1)

    assert graph.shortest_cycle_through_edge(c5, (0, 1)) == 5
    assert graph.shortest_cycle_through_edge(k4, (2, 3)) == 3
    with pytest.raises(graph.BridgeEdgeError):
        graph.shortest_cycle_through_edge(dumbbell, (0, 3))
    with pytest.raises(graph.EdgeNotFoundError):
        graph.shortest_cycle_through_edge(c5, (0, 2))


def test_classify_pendant() -> None:
    """
    arrange: Theta(1,2,2) with a pendant vertex attached to vertex 2.
    act: classify it.
    assert: the pendant case names the new vertex.
    """
    g = constructions.attach_pendant(constructions.build_theta(1, 2, 2), 2)

    case = graph.classify_bicyclic(g)

    assert case == graph.PendantCase(pendant=4)
    assert case.label == "pendant"


@pytest.mark.parametrize(
    "p, q, t",
    [
        pytest.param(3, 3, 0, id="bowtie"),
        pytest.param(3, 4, 2, id="linked"),
        pytest.param(4, 5, 0, id="shared vertex"),
    ],
)
def test_classify_cut_vertex(p, q, t) -> None:
    """
    arrange: a dumbbell.
    act: classify it.
    assert: the cut-vertex case carries the dumbbell parameters.
    """
    case = graph.classify_bicyclic(constructions.build_dumbbell(p, q, t))

    assert isinstance(case, graph.CutVertexCase)
    assert case.cut_vertex == 0
    assert case.dumbbell == (p, q, t)
    assert case.label == f"cut-vertex({p},{q},{t})"


def test_classify_theta() -> None:
    """
    arrange: Theta(2,3,4) relabelled by a rotation.
    act: classify it.
    assert: the theta case finds the path lengths.
    """
    g = constructions.build_theta(2, 3, 4)
    rotated = g.relabel([(v + 3) % g.n for v in range(g.n)])

    case = graph.classify_bicyclic(rotated)

    assert isinstance(case, graph.ThetaCase)
    assert (case.a, case.b, case.c) == (2, 3, 4)
    assert {case.x, case.y} == {3, 4}
    assert case.label == "theta(2,3,4)"


def test_classify_long_theta() -> None:
    """
    arrange: Theta(1,2,1000), longer than the interpreter recursion limit.
    act: classify it.
    assert: the theta case with its path lengths.
    """
    g = constructions.build_theta(1, 2, 1000)

    case = graph.classify_bicyclic(g)

    assert isinstance(case, graph.ThetaCase)
    assert (case.a, case.b, case.c) == (1, 2, 1000)


def test_cut_vertices_long_path() -> None:
    """
    arrange: the path on MAX_VERTICES vertices.
    act: find its cut vertices.
    assert: every inner vertex is a cut vertex.
    """
    n = graph.MAX_VERTICES
    g = Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    assert graph.cut_vertices(g) == frozenset(range(1, n - 1))


def test_classify_logs_case(caplog) -> None:
    """
    arrange: DEBUG logging and the dumbbell Dumbbell(3,3,0).
    act: classify it.
    assert: the case label is logged.
    """
    caplog.set_level(logging.DEBUG, logger="bicyclic_szeged.src.graph")

    graph.classify_bicyclic(constructions.build_dumbbell(3, 3, 0))

    assert "classified n=5 graph as cut-vertex(3,3,0)" in caplog.text


@pytest.mark.parametrize(
    "g",
    [
        pytest.param(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), id="unicyclic"),
        pytest.param(Graph.from_edges(3, [(0, 1), (1, 2)]), id="tree"),
        pytest.param(
            Graph.from_edges(
                7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (5, 6), (6, 3)]
            ),
            id="disconnected",
        ),
    ],
)
def test_classify_rejects_non_bicyclic(g) -> None:
    """
    arrange: graphs that are not connected with m = n + 1.
    act: classify them.
    assert: NotBicyclicError is raised.
    """
    with pytest.raises(graph.NotBicyclicError):
        graph.classify_bicyclic(g)
