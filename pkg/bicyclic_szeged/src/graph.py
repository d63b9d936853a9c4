# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Simple undirected graphs on bit-set adjacency and their distance structure."""

import dataclasses
import functools
import itertools
import logging
import typing

logger = logging.getLogger(__name__)

MAX_VERTICES = 1024
# strictly larger than any vertex count, keeps distance arithmetic integer-only
UNREACHABLE = 1 << 30

Edge = tuple[int, int]
DistanceVector = tuple[int, ...]
DistanceMatrix = tuple[DistanceVector, ...]


class GraphError(Exception):
    """Base class for graph errors."""


class InvalidGraphError(GraphError):
    """The graph is not a simple undirected graph."""


class SizeLimitError(GraphError):
    """The graph is larger than the operation supports."""


class VertexOutOfRangeError(GraphError):
    """A vertex is not in 0..n-1."""


class EdgeNotFoundError(GraphError):
    """The edge is not in the graph."""


class NotConnectedError(GraphError):
    """The operation requires a connected graph."""


class NotBicyclicError(GraphError):
    """The graph is not connected with m = n + 1."""


class BridgeEdgeError(GraphError):
    """The edge lies on no cycle."""


def iter_bits(mask: int) -> typing.Iterator[int]:
    """Iterate over the positions of the set bits of a mask, lowest first.

    Args:
        mask: bit set.

    Yields:
        positions of the set bits.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reachable_mask(adjacency: typing.Sequence[int], source: int) -> int:
    """Compute the set of vertices reachable from a source.

    Args:
        adjacency: per-vertex neighbour bit sets.
        source: start vertex.

    Returns:
        bit set of the vertices in the component of source.
    """
    visited = frontier = 1 << source
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adjacency[v]
        frontier = reach & ~visited
        visited |= frontier
    return visited


@dataclasses.dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 0..n-1.

    Values are immutable and safe to share across worker processes.

    Attributes:
        n: vertex count.
        adjacency: neighbour bit set of every vertex.
    """

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate the adjacency structure.

        Raises:
            SizeLimitError: if n is negative or above MAX_VERTICES.
            InvalidGraphError: if the adjacency is not simple and symmetric.
        """
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeLimitError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adjacency) != self.n:
            raise InvalidGraphError(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            )
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adjacency):
            if mask & ~full:
                raise InvalidGraphError(f"vertex {v} has a neighbour outside the graph")
            if mask >> v & 1:
                raise InvalidGraphError(f"self-loop at vertex {v}")
            for w in iter_bits(mask):
                if not self.adjacency[w] >> v & 1:
                    raise InvalidGraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: typing.Iterable[Edge]) -> "Graph":
        """Build a graph from an edge list.

        Args:
            n: vertex count.
            edges: unordered vertex pairs.

        Returns:
            the graph.

        Raises:
            VertexOutOfRangeError: if an endpoint is not in 0..n-1.
            InvalidGraphError: on self-loops or parallel edges.
        """
        adjacency = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if adjacency[u] >> v & 1:
                raise InvalidGraphError(f"parallel edge ({u}, {v})")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(n=n, adjacency=tuple(adjacency))

    @functools.cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))
        )

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def check_vertex(self, v: int) -> None:
        """Check that a vertex belongs to the graph.

        Args:
            v: vertex.

        Raises:
            VertexOutOfRangeError: if v is not in 0..n-1.
        """
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether u and v are adjacent.

        Args:
            u: first endpoint.
            v: second endpoint.

        Returns:
            True if uv is an edge.
        """
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adjacency[u] >> v & 1)

    def check_edge(self, edge: Edge) -> None:
        """Check that an edge belongs to the graph.

        Args:
            edge: vertex pair.

        Raises:
            EdgeNotFoundError: if the pair is not an edge.
        """
        if not self.has_edge(*edge):
            raise EdgeNotFoundError(f"edge {edge} not in graph")

    def neighbors(self, v: int) -> list[int]:
        """List the neighbours of a vertex in increasing order.

        Args:
            v: vertex.

        Returns:
            neighbours of v.
        """
        self.check_vertex(v)
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        """Get the degree of a vertex.

        Args:
            v: vertex.

        Returns:
            degree of v.
        """
        self.check_vertex(v)
        return self.adjacency[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Get the degree of every vertex.

        Returns:
            degrees indexed by vertex.
        """
        return tuple(mask.bit_count() for mask in self.adjacency)

    def add_vertex(self, neighbors: typing.Iterable[int] = ()) -> "Graph":
        """Add vertex n adjacent to the given vertices.

        Args:
            neighbors: existing vertices to connect the new vertex to.

        Returns:
            the enlarged graph.
        """
        return Graph.from_edges(self.n + 1, [*self.edges, *((v, self.n) for v in neighbors)])

    def add_edge(self, u: int, v: int) -> "Graph":
        """Add the edge uv.

        Args:
            u: first endpoint.
            v: second endpoint.

        Returns:
            the graph with uv added.
        """
        return Graph.from_edges(self.n, [*self.edges, (u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Remove the edge uv.

        Args:
            u: first endpoint.
            v: second endpoint.

        Returns:
            the graph without uv.
        """
        self.check_edge((u, v))
        adjacency = list(self.adjacency)
        adjacency[u] &= ~(1 << v)
        adjacency[v] &= ~(1 << u)
        return Graph(n=self.n, adjacency=tuple(adjacency))

    def relabel(self, permutation: typing.Sequence[int]) -> "Graph":
        """Rename vertex v to permutation[v].

        Args:
            permutation: a permutation of 0..n-1.

        Returns:
            the relabelled graph.

        Raises:
            InvalidGraphError: if permutation is not a permutation of 0..n-1.
        """
        if sorted(permutation) != list(range(self.n)):
            raise InvalidGraphError("relabelling is not a permutation of the vertices")
        return Graph.from_edges(self.n, [(permutation[u], permutation[v]) for u, v in self.edges])


def bfs_distances(g: Graph, source: int) -> DistanceVector:
    """Compute hop distances from a source vertex.

    Args:
        g: graph.
        source: start vertex.

    Returns:
        distance to every vertex, UNREACHABLE outside the component of source.
    """
    g.check_vertex(source)
    distances = [UNREACHABLE] * g.n
    distances[source] = 0
    visited = frontier = 1 << source
    level = 0
    while frontier:
        level += 1
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adjacency[v]
        frontier = reach & ~visited
        visited |= frontier
        for v in iter_bits(frontier):
            distances[v] = level
    return tuple(distances)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Compute the distance matrix with one BFS sweep per vertex.

    Args:
        g: graph.

    Returns:
        symmetric matrix of hop distances.
    """
    return tuple(bfs_distances(g, source) for source in range(g.n))


def is_connected(g: Graph) -> bool:
    """Check connectivity; graphs with at most one vertex are connected.

    Args:
        g: graph.

    Returns:
        True if every vertex is reachable from vertex 0.
    """
    if g.n <= 1:
        return True
    return reachable_mask(g.adjacency, 0) == (1 << g.n) - 1


def min_degree(g: Graph) -> int:
    """Get the minimum degree, 0 for the empty graph.

    Args:
        g: graph.

    Returns:
        smallest vertex degree.
    """
    return min(g.degrees(), default=0)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Get the degrees in non-increasing order.

    Args:
        g: graph.

    Returns:
        sorted degree sequence.
    """
    return tuple(sorted(g.degrees(), reverse=True))


def cut_vertices(g: Graph) -> frozenset[int]:
    """Find the articulation points with a DFS low-link sweep.

    Iterative, with an explicit stack of neighbour iterators.

    Args:
        g: connected graph.

    Returns:
        the cut vertices.

    Raises:
        NotConnectedError: if g is disconnected.
    """
    if not is_connected(g):
        raise NotConnectedError("cut vertices need a connected graph")
    if g.n <= 2:
        return frozenset()
    order = [-1] * g.n
    low = [0] * g.n
    counter = itertools.count()
    cuts: set[int] = set()
    order[0] = low[0] = next(counter)
    root_children = 0
    stack: list[tuple[int, int, typing.Iterator[int]]] = [(0, -1, iter_bits(g.adjacency[0]))]
    while stack:
        v, parent, pending = stack[-1]
        w = next(pending, None)
        if w is None:
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if parent != 0 and low[v] >= order[parent]:
                cuts.add(parent)
        elif order[w] == -1:
            if v == 0:
                root_children += 1
            order[w] = low[w] = next(counter)
            stack.append((w, v, iter_bits(g.adjacency[w])))
        elif w != parent:
            low[v] = min(low[v], order[w])
    if root_children > 1:
        cuts.add(0)
    return frozenset(cuts)


def is_two_connected(g: Graph) -> bool:
    """Check 2-connectivity.

    Args:
        g: graph.

    Returns:
        True if g has at least 3 vertices, is connected and has no cut vertex.
    """
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def shortest_cycle_through_edge(g: Graph, edge: Edge) -> int:
    """Get the length of the shortest cycle containing an edge.

    Args:
        g: graph.
        edge: vertex pair (u, v).

    Returns:
        1 + the u-v distance once the edge is removed.

    Raises:
        BridgeEdgeError: if the edge is a bridge.
    """
    u, v = edge
    g.check_edge(edge)
    distance = bfs_distances(g.remove_edge(u, v), u)[v]
    if distance == UNREACHABLE:
        raise BridgeEdgeError(f"edge {edge} is a bridge")
    return distance + 1


@dataclasses.dataclass(frozen=True)
class PendantCase:
    """Bicyclic graph with minimum degree 1.

    Attributes:
        pendant: smallest vertex of degree 1.
    """

    pendant: int

    @property
    def label(self) -> str:
        """Short tag used in reports."""
        return "pendant"


@dataclasses.dataclass(frozen=True)
class CutVertexCase:
    """Bicyclic graph with minimum degree at least 2 and a cut vertex.

    Such a graph is two cycles joined by a path, or sharing a vertex.

    Attributes:
        cut_vertex: smallest cut vertex.
        dumbbell: cycle lengths p <= q and linking path length t.
    """

    cut_vertex: int
    dumbbell: tuple[int, int, int]

    @property
    def label(self) -> str:
        """Short tag used in reports."""
        p, q, t = self.dumbbell
        return f"cut-vertex({p},{q},{t})"


@dataclasses.dataclass(frozen=True)
class ThetaCase:
    """2-connected bicyclic graph: two hubs joined by three disjoint paths.

    Attributes:
        x: first degree-3 hub.
        y: second degree-3 hub.
        a: shortest path length.
        b: middle path length.
        c: longest path length.
    """

    x: int
    y: int
    a: int
    b: int
    c: int

    @property
    def label(self) -> str:
        """Short tag used in reports."""
        return f"theta({self.a},{self.b},{self.c})"


BicyclicClass = PendantCase | CutVertexCase | ThetaCase


def _dumbbell_shape(g: Graph, degrees: tuple[int, ...]) -> tuple[int, int, int]:
    """Read the cycle and path lengths of a graph that is a dumbbell.

    Args:
        g: bicyclic graph with minimum degree 2 and a cut vertex.
        degrees: vertex degrees of g.

    Returns:
        (p, q, t) with p <= q.
    """
    hubs = [v for v, degree in enumerate(degrees) if degree > 2]
    if len(hubs) == 1:
        hubs, t = [hubs[0]], 0
    else:
        t = bfs_distances(g, hubs[0])[hubs[1]]
    lengths = []
    for hub in hubs:
        for w in g.neighbors(hub):
            try:
                lengths.append(shortest_cycle_through_edge(g, (hub, w)))
            except BridgeEdgeError:
                continue
    lengths.sort()
    return lengths[0], lengths[-1], t


def _theta_case(g: Graph, degrees: tuple[int, ...]) -> ThetaCase:
    """Extract the hubs and path lengths of a 2-connected bicyclic graph.

    Args:
        g: 2-connected bicyclic graph.
        degrees: vertex degrees of g.

    Returns:
        the theta classification.
    """
    x, y = (v for v, degree in enumerate(degrees) if degree == 3)
    lengths = []
    for start in iter_bits(g.adjacency[x]):
        previous, current, length = x, start, 1
        while current != y:
            previous, current = current, next(
                w for w in iter_bits(g.adjacency[current]) if w != previous
            )
            length += 1
        lengths.append(length)
    a, b, c = sorted(lengths)
    return ThetaCase(x=x, y=y, a=a, b=b, c=c)


def classify_bicyclic(g: Graph) -> BicyclicClass:
    """Classify a bicyclic graph into pendant, cut-vertex or theta case.

    Args:
        g: connected graph with m = n + 1.

    Returns:
        the first case that applies, in the order pendant, cut vertex, theta.

    Raises:
        NotBicyclicError: if g is disconnected or m != n + 1.
    """
    if g.m != g.n + 1 or not is_connected(g):
        raise NotBicyclicError(
            f"expected a connected graph with m = n + 1, got n={g.n} m={g.m}"
        )
    degrees = g.degrees()
    result: BicyclicClass
    if min(degrees) == 1:
        result = PendantCase(pendant=degrees.index(1))
    elif cuts := cut_vertices(g):
        result = CutVertexCase(cut_vertex=min(cuts), dumbbell=_dumbbell_shape(g, degrees))
    else:
        result = _theta_case(g, degrees)
    logger.debug("classified n=%d graph as %s", g.n, result.label)
    return result
