# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Canonical form unit tests."""

import itertools
import random

import networkx
import pytest

from bicyclic_szeged.src import canonical, constructions, graph, graph6
from bicyclic_szeged.src.graph import Graph


def _shuffled(g: Graph, rng: random.Random) -> Graph:
    """Relabel a graph by a random permutation.

    Args:
        g: graph.
        rng: random source.

    Returns:
        an isomorphic copy.
    """
    permutation = list(range(g.n))
    rng.shuffle(permutation)
    return g.relabel(permutation)


@pytest.mark.parametrize(
    "g",
    [
        pytest.param(
            Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)]), id="K3,3"
        ),
        pytest.param(Graph.from_edges(7, [(0, v) for v in range(1, 7)]), id="star"),
        pytest.param(Graph.from_edges(6, itertools.combinations(range(6), 2)), id="K6"),
        pytest.param(Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)]), id="C8"),
        pytest.param(constructions.build_theta(3, 3, 3), id="Theta(3,3,3)"),
        pytest.param(constructions.build_dumbbell(4, 4, 0), id="Dumbbell(4,4,0)"),
        pytest.param(Graph(n=5, adjacency=(0,) * 5), id="edgeless"),
    ],
)
def test_form_invariant_under_relabelling_symmetric_graphs(g) -> None:
    """
    arrange: highly symmetric graphs, where twin pruning and ties matter most.
    act: compute the canonical form of random relabellings.
    assert: every relabelling has the same form.
    """
    rng = random.Random(7)
    form = canonical.canonical_form(g)

    for _ in range(20):
        assert canonical.canonical_form(_shuffled(g, rng)) == form


def test_form_invariant_under_relabelling(random_connected_graphs) -> None:
    """
    arrange: random connected graphs with at most 12 vertices.
    act: compute the canonical form of a random relabelling.
    assert: the forms agree.
    """
    rng = random.Random(11)
    small = [g for g in random_connected_graphs if g.n <= 12][:300]

    for g in small:
        assert canonical.canonical_form(_shuffled(g, rng)) == canonical.canonical_form(g)


def test_form_separates_non_isomorphic_graphs() -> None:
    """
    arrange: random pairs of graphs with 6 vertices and 7 edges.
    act: compare canonical forms.
    assert: forms are equal exactly when networkx finds an isomorphism.
    """
    rng = random.Random(13)
    pairs = list(itertools.combinations(range(6), 2))
    for _ in range(300):
        g = Graph.from_edges(6, rng.sample(pairs, 7))
        h = Graph.from_edges(6, rng.sample(pairs, 7))
        nx_g = networkx.Graph(g.edges)
        nx_g.add_nodes_from(range(6))
        nx_h = networkx.Graph(h.edges)
        nx_h.add_nodes_from(range(6))
        assert canonical.are_isomorphic(g, h) == networkx.is_isomorphic(nx_g, nx_h)


def test_form_is_graph6_of_a_relabelling() -> None:
    """
    arrange: K4 and B_6.
    act: compute the canonical forms.
    assert: the form is a graph6 string of an isomorphic graph.
    """
    k4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
    bn = constructions.build_bn(6)

    form = canonical.canonical_form(bn)

    assert canonical.canonical_form(k4) == b"C~"
    assert canonical.are_isomorphic(graph6.from_graph6(form.decode("ascii")), bn)


def test_are_isomorphic_named_families() -> None:
    """
    arrange: B_6, Theta(2,2,3) and Theta(1,2,4).
    act: compare them.
    assert: B_6 is Theta(2,2,3) and differs from Theta(1,2,4).
    """
    bn = constructions.build_bn(6)

    assert canonical.are_isomorphic(bn, constructions.build_theta(2, 2, 3))
    assert not canonical.are_isomorphic(bn, constructions.build_theta(1, 2, 4))


def test_size_limit() -> None:
    """
    arrange: a path on 17 vertices.
    act: compute its canonical form.
    assert: SizeLimitError is raised.
    """
    path = Graph.from_edges(17, [(i, i + 1) for i in range(16)])

    with pytest.raises(graph.SizeLimitError):
        canonical.canonical_form(path)
