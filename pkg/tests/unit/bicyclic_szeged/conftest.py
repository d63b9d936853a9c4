# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures for bicyclic-szeged tests."""

import random

import networkx
import pytest

from bicyclic_szeged.src.graph import Graph

RANDOM_SEED = 20250601
RANDOM_CORPUS_SIZE = 1000
MAX_RANDOM_ORDER = 20


def _to_networkx(g: Graph) -> networkx.Graph:
    """Convert a graph to networkx for oracle checks.

    Args:
        g: graph.

    Returns:
        the networkx graph on the same vertices.
    """
    nx_graph = networkx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges)
    return nx_graph


def _random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Attach every vertex to a random earlier vertex.

    Args:
        rng: random source.
        n: vertex count.

    Returns:
        edges of a random labelled tree.
    """
    return [(rng.randrange(v), v) for v in range(1, n)]


def _random_connected_graph(rng: random.Random) -> Graph:
    """Build a random connected graph on at most MAX_RANDOM_ORDER vertices.

    Args:
        rng: random source.

    Returns:
        a random spanning tree plus random extra edges.
    """
    n = rng.randint(1, MAX_RANDOM_ORDER)
    edges = set(_random_tree_edges(rng, n))
    density = rng.random() * 0.5
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.add((u, v))
    return Graph.from_edges(n, {(min(e), max(e)) for e in edges})


def _random_bipartite_graph(rng: random.Random) -> Graph:
    """Build a random connected bipartite graph.

    Args:
        rng: random source.

    Returns:
        a spanning tree with alternating sides plus random cross edges.
    """
    n = rng.randint(2, MAX_RANDOM_ORDER)
    side = [0] * n
    edges = set()
    for v, parent in ((v, rng.randrange(v)) for v in range(1, n)):
        side[v] = 1 - side[parent]
        edges.add((parent, v))
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] != side[v] and rng.random() < 0.3:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


@pytest.fixture(name="to_networkx", scope="session")
def to_networkx_fixture():
    """Converter from graphs to networkx graphs."""
    return _to_networkx


@pytest.fixture(name="random_connected_graphs", scope="session")
def random_connected_graphs_fixture() -> list[Graph]:
    """Random connected graphs of order at most 20."""
    rng = random.Random(RANDOM_SEED)
    return [_random_connected_graph(rng) for _ in range(RANDOM_CORPUS_SIZE)]


@pytest.fixture(name="random_bipartite_graphs", scope="session")
def random_bipartite_graphs_fixture() -> list[Graph]:
    """Random connected bipartite graphs of order at most 20."""
    rng = random.Random(RANDOM_SEED + 1)
    return [_random_bipartite_graph(rng) for _ in range(200)]


@pytest.fixture(name="random_trees", scope="session")
def random_trees_fixture() -> list[Graph]:
    """Random labelled trees of order at most 20."""
    rng = random.Random(RANDOM_SEED + 2)
    trees = []
    for _ in range(200):
        n = rng.randint(1, MAX_RANDOM_ORDER)
        trees.append(Graph.from_edges(n, _random_tree_edges(rng, n)))
    return trees
