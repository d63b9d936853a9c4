# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Canonical forms for isomorphism deduplication at enumeration scale.

The canonical form is the graph6 encoding of the relabelling whose upper-triangle bit
string is lexicographically smallest among all vertex orderings that list the colour
classes of an isomorphism-invariant colouring in order. The colouring starts from the
degree and the BFS layer sizes of every vertex and is refined by neighbour colours
until stable. Orderings are searched level by level keeping only the partial orderings
with the smallest prefix; interchangeable twin vertices are tried once.
"""

import collections
import typing

from .graph import Graph, SizeLimitError, iter_bits
from .graph6 import to_graph6

MAX_CANONICAL_VERTICES = 16


def _layer_profile(adjacency: typing.Sequence[int], source: int) -> tuple[int, ...]:
    """Count the vertices at each BFS distance from a source.

    Args:
        adjacency: per-vertex neighbour bit sets.
        source: start vertex.

    Returns:
        sizes of the BFS layers after the source.
    """
    visited = frontier = 1 << source
    sizes = []
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adjacency[v]
        frontier = reach & ~visited
        visited |= frontier
        if frontier:
            sizes.append(frontier.bit_count())
    return tuple(sizes)


def _rank(signatures: typing.Sequence[typing.Any]) -> list[int]:
    """Replace signatures by their rank among the distinct signatures.

    Args:
        signatures: comparable per-vertex signatures.

    Returns:
        per-vertex ranks.
    """
    order = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
    return [order[signature] for signature in signatures]


def _stable_colors(n: int, adjacency: typing.Sequence[int]) -> list[int]:
    """Compute the refined invariant colouring.

    Args:
        n: vertex count.
        adjacency: per-vertex neighbour bit sets.

    Returns:
        per-vertex colour ranks.
    """
    colors = _rank(
        [(adjacency[v].bit_count(), _layer_profile(adjacency, v)) for v in range(n)]
    )
    classes = len(set(colors))
    while True:
        refined = _rank(
            [
                (colors[v], tuple(sorted(colors[w] for w in iter_bits(adjacency[v]))))
                for v in range(n)
            ]
        )
        refined_classes = len(set(refined))
        if refined_classes == classes:
            return colors
        colors, classes = refined, refined_classes


def _twin_classes(n: int, adjacency: typing.Sequence[int]) -> list[typing.Hashable]:
    """Group vertices whose transposition is an automorphism.

    Args:
        n: vertex count.
        adjacency: per-vertex neighbour bit sets.

    Returns:
        per-vertex twin class key; singleton classes get a unique key.
    """
    false_twins = collections.Counter(adjacency)
    true_twins = collections.Counter(adjacency[v] | 1 << v for v in range(n))
    keys: list[typing.Hashable] = []
    for v in range(n):
        if false_twins[adjacency[v]] > 1:
            keys.append(("open", adjacency[v]))
        elif true_twins[adjacency[v] | 1 << v] > 1:
            keys.append(("closed", adjacency[v] | 1 << v))
        else:
            keys.append(("single", v))
    return keys


def canonical_order(n: int, adjacency: typing.Sequence[int]) -> tuple[int, ...]:
    """Find a vertex ordering realizing the canonical bit string.

    Args:
        n: vertex count.
        adjacency: per-vertex neighbour bit sets.

    Returns:
        vertices listed by canonical position.
    """
    colors = _stable_colors(n, adjacency)
    twins = _twin_classes(n, adjacency)
    slots = sorted(colors)
    frontier: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for position in range(n):
        best_column = -1
        extended: list[tuple[tuple[int, ...], int]] = []
        for order, placed in frontier:
            tried = set()
            for v in range(n):
                if placed >> v & 1 or colors[v] != slots[position] or twins[v] in tried:
                    continue
                tried.add(twins[v])
                column = 0
                for u in order:
                    column = column << 1 | (adjacency[v] >> u & 1)
                if best_column == -1 or column < best_column:
                    best_column = column
                    extended = []
                if column == best_column:
                    extended.append(((*order, v), placed | 1 << v))
        frontier = extended
    return frontier[0][0]


def canonical_form_from_adjacency(n: int, adjacency: typing.Sequence[int]) -> bytes:
    """Compute the canonical form from raw adjacency bit sets.

    Args:
        n: vertex count.
        adjacency: per-vertex neighbour bit sets.

    Returns:
        graph6 bytes of the canonically relabelled graph.

    Raises:
        SizeLimitError: if n exceeds MAX_CANONICAL_VERTICES.
    """
    if n > MAX_CANONICAL_VERTICES:
        raise SizeLimitError(f"canonical form supports n <= {MAX_CANONICAL_VERTICES}")
    order = canonical_order(n, adjacency)
    position = [0] * n
    for index, v in enumerate(order):
        position[v] = index
    relabelled = [0] * n
    for v in range(n):
        for w in iter_bits(adjacency[v]):
            relabelled[position[v]] |= 1 << position[w]
    return to_graph6(Graph(n=n, adjacency=tuple(relabelled))).encode("ascii")


def canonical_form(g: Graph) -> bytes:
    """Compute a permutation-invariant label of a graph.

    Args:
        g: graph with at most 16 vertices.

    Returns:
        graph6 bytes of the canonical relabelling; equal iff the graphs are isomorphic.
    """
    return canonical_form_from_adjacency(g.n, g.adjacency)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Check isomorphism by comparing canonical forms.

    Args:
        g: first graph.
        h: second graph.

    Returns:
        True if g and h are isomorphic.
    """
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
