# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Distance-based topological indices in exact integer arithmetic.

The revised Szeged index is a sum of quarter-integers, so every value in the pipeline
is kept as four times its value (a QuarterValue) and never touches floating point.
"""

import dataclasses
import decimal

from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Edge,
    Graph,
    NotBicyclicError,
    NotConnectedError,
    all_pairs_distances,
)

MIN_BICYCLIC_BOUND_ORDER = 6


class OutOfScopeError(ValueError):
    """The order is outside the range the extremal bound is stated for."""


@dataclasses.dataclass(frozen=True, order=True)
class QuarterValue:
    """Exact multiple of 1/4.

    Attributes:
        q: four times the represented value.
    """

    q: int

    def __add__(self, other: "QuarterValue") -> "QuarterValue":
        """Add two quarter values.

        Args:
            other: the other summand.

        Returns:
            the exact sum.
        """
        return QuarterValue(self.q + other.q)

    def to_decimal(self) -> decimal.Decimal:
        """Get the exact decimal value.

        Returns:
            q / 4 with at most two fractional digits.
        """
        return decimal.Decimal(self.q) / 4

    def as_fraction_text(self) -> str:
        """Render as "q/4".

        Returns:
            the scaled integer with its unit marker.
        """
        return f"{self.q}/4"

    def __str__(self) -> str:
        """Render as an exact decimal: "16", "61.5", "61.25".

        Returns:
            the decimal text.
        """
        return str(self.to_decimal())


@dataclasses.dataclass(frozen=True)
class EdgePartition:
    """Vertex partition with respect to an edge uv.

    Attributes:
        edge: the edge (u, v), oriented as requested.
        n_u: vertices strictly closer to u.
        n_v: vertices strictly closer to v.
        n_0: vertices at equal distance from u and v.
    """

    edge: Edge
    n_u: int
    n_v: int
    n_0: int

    @property
    def deviation(self) -> int:
        """Signed difference n_u - n_v."""
        return self.n_u - self.n_v


@dataclasses.dataclass(frozen=True)
class IndexSummary:
    """All indices of one connected graph.

    Attributes:
        wiener: Wiener index.
        szeged: Szeged index.
        revised_szeged: revised Szeged index.
        deviation_sum: sum over edges of (n_u - n_v)^2.
    """

    wiener: int
    szeged: int
    revised_szeged: QuarterValue
    deviation_sum: int


def _connected_distances(g: Graph) -> DistanceMatrix:
    """Compute the distance matrix of a graph that must be connected.

    Args:
        g: graph.

    Returns:
        the distance matrix.

    Raises:
        NotConnectedError: if some pair is unreachable.
    """
    distances = all_pairs_distances(g)
    if any(UNREACHABLE in row for row in distances):
        raise NotConnectedError("indices are defined for connected graphs")
    return distances


def edge_partition(g: Graph, edge: Edge, distances: DistanceMatrix) -> EdgePartition:
    """Classify every vertex by its distances to the endpoints of an edge.

    Args:
        g: connected graph.
        edge: vertex pair (u, v) of g.
        distances: distance matrix of g.

    Returns:
        the partition counts.
    """
    g.check_edge(edge)
    from_u, from_v = distances[edge[0]], distances[edge[1]]
    n_u = n_v = 0
    for d_u, d_v in zip(from_u, from_v):
        if d_u < d_v:
            n_u += 1
        elif d_v < d_u:
            n_v += 1
    return EdgePartition(edge=edge, n_u=n_u, n_v=n_v, n_0=g.n - n_u - n_v)


def edge_partitions(
    g: Graph, distances: DistanceMatrix | None = None
) -> list[EdgePartition]:
    """Compute the partition of every edge from one distance matrix.

    Args:
        g: connected graph.
        distances: precomputed distance matrix, computed when omitted.

    Returns:
        partitions in edge order.
    """
    if distances is None:
        distances = _connected_distances(g)
    return [edge_partition(g, edge, distances) for edge in g.edges]


def _revised_term_x4(partition: EdgePartition) -> int:
    """Four times (n_u + n_0/2)(n_v + n_0/2).

    Args:
        partition: edge partition.

    Returns:
        the scaled per-edge term.
    """
    return (2 * partition.n_u + partition.n_0) * (2 * partition.n_v + partition.n_0)


def wiener(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs.

    Args:
        g: connected graph.

    Returns:
        the Wiener index.
    """
    distances = _connected_distances(g)
    return sum(sum(row) for row in distances) // 2


def szeged(g: Graph) -> int:
    """Sum over edges of n_u * n_v.

    Args:
        g: connected graph.

    Returns:
        the Szeged index.
    """
    return sum(p.n_u * p.n_v for p in edge_partitions(g))


def revised_szeged_x4(g: Graph) -> QuarterValue:
    """Revised Szeged index, the sum over edges of (n_u + n_0/2)(n_v + n_0/2).

    Args:
        g: connected graph.

    Returns:
        the exact value as a quarter value.
    """
    return QuarterValue(sum(_revised_term_x4(p) for p in edge_partitions(g)))


def deviation_sum(g: Graph) -> int:
    """Sum over edges of (n_u - n_v)^2.

    Args:
        g: connected graph.

    Returns:
        the deviation sum.
    """
    return sum(p.deviation**2 for p in edge_partitions(g))


def summarize(g: Graph) -> IndexSummary:
    """Compute every index from a single distance matrix.

    Args:
        g: connected graph.

    Returns:
        the summary.
    """
    distances = _connected_distances(g)
    partitions = edge_partitions(g, distances)
    return IndexSummary(
        wiener=sum(sum(row) for row in distances) // 2,
        szeged=sum(p.n_u * p.n_v for p in partitions),
        revised_szeged=QuarterValue(sum(_revised_term_x4(p) for p in partitions)),
        deviation_sum=sum(p.deviation**2 for p in partitions),
    )


def conjecture_bound_x4(n: int) -> QuarterValue:
    """Largest revised Szeged index of a bicyclic graph of order n.

    Args:
        n: order, at least 6.

    Returns:
        n^3 + n^2 - n - 1 for odd n, n^3 + n^2 - n for even n, as quarter units.

    Raises:
        OutOfScopeError: if n < 6.
    """
    if n < MIN_BICYCLIC_BOUND_ORDER:
        raise OutOfScopeError(f"the bicyclic bound is stated for n >= 6, got {n}")
    q = n**3 + n**2 - n
    return QuarterValue(q - 1 if n % 2 else q)


def revised_szeged_upper_bound_x4(g: Graph) -> QuarterValue:
    """General upper bound n^2 m / 4 for connected graphs.

    Args:
        g: graph.

    Returns:
        n^2 m as quarter units.
    """
    return QuarterValue(g.n**2 * g.m)


def general_identity_residual(g: Graph) -> int:
    """Check 4 Sz* = m n^2 - deviation_sum, valid for every connected graph.

    Args:
        g: connected graph.

    Returns:
        4 Sz*(g) - (m n^2 - deviation_sum(g)), always 0.
    """
    summary = summarize(g)
    return summary.revised_szeged.q - (g.m * g.n**2 - summary.deviation_sum)


def bicyclic_identity_residual(g: Graph) -> int:
    """Check 4 Sz* = n^3 + n^2 - deviation_sum on a bicyclic graph.

    Args:
        g: connected graph with m = n + 1.

    Returns:
        4 Sz*(g) - (n^3 + n^2 - deviation_sum(g)), always 0.

    Raises:
        NotBicyclicError: if m != n + 1.
    """
    if g.m != g.n + 1:
        raise NotBicyclicError(f"expected m = n + 1, got n={g.n} m={g.m}")
    summary = summarize(g)
    return summary.revised_szeged.q - (g.n**3 + g.n**2 - summary.deviation_sum)


def expected_bn_deviation_sum(n: int) -> int:
    """Deviation sum of B_n implied by the bound and the bicyclic identity.

    Args:
        n: order, at least 6.

    Returns:
        n for even n, n + 1 for odd n.
    """
    return n**3 + n**2 - conjecture_bound_x4(n).q

