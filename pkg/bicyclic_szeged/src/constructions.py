# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Builders for the named bicyclic families and the per-edge theta analyzer.

Vertex numbering is fixed so edges can be named deterministically:

* theta graphs: hubs x = 0 and y = 1, then the interiors of the paths of lengths
  a, b and c, each listed from x towards y;
* dumbbells: the first cycle on 0..p-1 with junction u = 0, then the interior of the
  linking path, its far end v, then the rest of the second cycle;
* B_n: the cycle 0..n-2 and the duplicate n-1 of vertex 0, adjacent to 1 and n-2.
"""

import enum
import functools
import logging
import typing

import pydantic
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from .graph import DistanceMatrix, Edge, Graph, all_pairs_distances, shortest_cycle_through_edge
from .indices import edge_partition

MIN_BN_ORDER = 5

logger = logging.getLogger(__name__)


class InvalidShapeError(ValueError):
    """The requested construction does not give a simple bicyclic graph."""


class Theta(BaseModel):
    """Two hubs joined by three internally disjoint paths.

    Attributes:
        model_config: Pydantic model configuration.
        kind: shape discriminator.
        a: shortest path length.
        b: middle path length, at least 2 so the graph stays simple.
        c: longest path length.
    """

    model_config = ConfigDict(frozen=True)
    kind: typing.Literal["theta"] = "theta"
    a: int = Field(ge=1)
    b: int = Field(ge=2)
    c: int = Field(ge=2)

    @model_validator(mode="after")
    def _validate_order(self) -> "Theta":
        """Require a <= b <= c.

        Returns:
            the validated shape.
        """
        if not self.a <= self.b <= self.c:
            raise ValueError("path lengths must satisfy a <= b <= c")
        return self

    @property
    def vertex_count(self) -> int:
        """Order of the built graph."""
        return self.a + self.b + self.c - 1

    def __str__(self) -> str:
        """Render as Theta(a,b,c).

        Returns:
            the shape text.
        """
        return f"Theta({self.a},{self.b},{self.c})"


class Dumbbell(BaseModel):
    """Two cycles joined by a path of length t, sharing a vertex when t = 0.

    Attributes:
        model_config: Pydantic model configuration.
        kind: shape discriminator.
        p: length of the smaller cycle.
        q: length of the larger cycle.
        t: length of the linking path.
    """

    model_config = ConfigDict(frozen=True)
    kind: typing.Literal["dumbbell"] = "dumbbell"
    p: int = Field(ge=3)
    q: int = Field(ge=3)
    t: int = Field(ge=0)

    @model_validator(mode="after")
    def _validate_order(self) -> "Dumbbell":
        """Require p <= q.

        Returns:
            the validated shape.
        """
        if self.p > self.q:
            raise ValueError("cycle lengths must satisfy p <= q")
        return self

    @property
    def vertex_count(self) -> int:
        """Order of the built graph."""
        return self.p + self.q + self.t - 1

    def __str__(self) -> str:
        """Render as Dumbbell(p,q,t).

        Returns:
            the shape text.
        """
        return f"Dumbbell({self.p},{self.q},{self.t})"


SkeletonShape = typing.Annotated[Theta | Dumbbell, Field(discriminator="kind")]


class ThetaEdgeCase(str, enum.Enum):
    """Where the two hubs fall in the partition of an edge.

    Attributes:
        DIFFERENT_SETS: one hub strictly closer to each endpoint.
        SAME_SET: both hubs strictly closer to the same endpoint.
        HUB_EQUIDISTANT: a hub is equidistant from the endpoints.
    """

    DIFFERENT_SETS = "different-sets"
    SAME_SET = "same-set"
    HUB_EQUIDISTANT = "hub-equidistant"


class ThetaEdgeAnalysis(BaseModel):
    """Predicted and actual |n_u - n_v| of one theta edge.

    Attributes:
        model_config: Pydantic model configuration.
        edge: the analysed edge.
        case: hub placement case.
        a_i: distance from hub x to the edge, for different-sets edges.
        b_i: distance from hub y to the edge, for different-sets edges.
        cycle_length: shortest cycle through the edge, for same-set edges.
        predicted: exact |n_u - n_v| for the first two cases, lower bound a - 1 for the
            hub-equidistant case.
        actual: |n_u - n_v| from the edge partition.
        middle_of_odd_path: the edge is the middle edge of an odd hub-to-hub path.
    """

    model_config = ConfigDict(frozen=True)
    edge: tuple[int, int]
    case: ThetaEdgeCase
    a_i: int | None = None
    b_i: int | None = None
    cycle_length: int | None = None
    predicted: int
    actual: int
    middle_of_odd_path: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def holds(self) -> bool:
        """Whether the case formula holds for this edge."""
        if self.case is ThetaEdgeCase.HUB_EQUIDISTANT:
            return self.actual >= self.predicted
        return self.actual == self.predicted


def _validated(model: type[BaseModel], **fields: int) -> typing.Any:
    """Validate a shape and wrap validation errors.

    Args:
        model: shape model.
        fields: shape parameters.

    Returns:
        the validated shape.

    Raises:
        InvalidShapeError: if the parameters are invalid.
    """
    try:
        return model(**fields)
    except pydantic.ValidationError as exc:
        problems = [
            f"{'.'.join(map(str, error['loc'])) or 'shape'}: {error['msg']}"
            for error in exc.errors()
        ]
        raise InvalidShapeError(
            f"invalid {model.__name__.lower()} {fields}: {'; '.join(problems)}"
        ) from exc


def theta_shape(a: int, b: int, c: int) -> Theta:
    """Validate theta path lengths.

    Args:
        a: shortest path length.
        b: middle path length.
        c: longest path length.

    Returns:
        the shape.
    """
    return _validated(Theta, a=a, b=b, c=c)


def dumbbell_shape(p: int, q: int, t: int) -> Dumbbell:
    """Validate dumbbell parameters, ordering the cycle lengths.

    Args:
        p: first cycle length.
        q: second cycle length.
        t: linking path length.

    Returns:
        the shape with p <= q.
    """
    return _validated(Dumbbell, p=min(p, q), q=max(p, q), t=t)


def theta_paths(shape: Theta) -> list[list[int]]:
    """List the hub-to-hub paths of a theta graph.

    Args:
        shape: theta shape.

    Returns:
        three vertex lists from x = 0 to y = 1, for path lengths a, b, c.
    """
    paths = []
    label = 2
    for length in (shape.a, shape.b, shape.c):
        interior = list(range(label, label + length - 1))
        label += length - 1
        paths.append([0, *interior, 1])
    return paths


def _dumbbell_layout(shape: Dumbbell) -> tuple[list[int], list[int], list[int]]:
    """Lay out the two cycles and the linking path of a dumbbell.

    Args:
        shape: dumbbell shape.

    Returns:
        first cycle starting at u, path from u to v, second cycle starting at v.
    """
    first_cycle = list(range(shape.p))
    link = [0, *range(shape.p, shape.p + shape.t)]
    label = shape.p + shape.t
    second_cycle = [link[-1], *range(label, label + shape.q - 1)]
    return first_cycle, link, second_cycle


def _cycle_edges(cycle: list[int]) -> list[Edge]:
    """Get the edges of a closed vertex sequence.

    Args:
        cycle: cycle vertices in order.

    Returns:
        consecutive pairs including the closing one.
    """
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def _path_edges(path: list[int]) -> list[Edge]:
    """Get the edges of an open vertex sequence.

    Args:
        path: path vertices in order.

    Returns:
        consecutive pairs.
    """
    return list(zip(path, path[1:]))


def build_skeleton(shape: Theta | Dumbbell) -> Graph:
    """Build the graph of a skeleton shape.

    Args:
        shape: theta or dumbbell shape.

    Returns:
        the 2-core graph with the documented vertex numbering.
    """
    if isinstance(shape, Theta):
        edges = [edge for path in theta_paths(shape) for edge in _path_edges(path)]
    else:
        first_cycle, link, second_cycle = _dumbbell_layout(shape)
        edges = [*_cycle_edges(first_cycle), *_path_edges(link), *_cycle_edges(second_cycle)]
    logger.debug("building %s on %d vertices", shape, shape.vertex_count)
    return Graph.from_edges(shape.vertex_count, edges)


def build_theta(a: int, b: int, c: int) -> Graph:
    """Build the theta graph with path lengths a <= b <= c.

    Args:
        a: shortest path length.
        b: middle path length.
        c: longest path length.

    Returns:
        the theta graph on a + b + c - 1 vertices.
    """
    return build_skeleton(theta_shape(a, b, c))


def build_dumbbell(p: int, q: int, t: int) -> Graph:
    """Build two cycles C_p and C_q joined by a path of length t.

    The smaller cycle always comes first in the vertex numbering.

    Args:
        p: first cycle length.
        q: second cycle length.
        t: linking path length, 0 for a shared vertex.

    Returns:
        the dumbbell on p + q + t - 1 vertices.
    """
    return build_skeleton(dumbbell_shape(p, q, t))


def build_bn(n: int) -> Graph:
    """Build B_n, the cycle C_{n-1} with one vertex duplicated.

    Args:
        n: order, at least 5.

    Returns:
        the graph with n vertices and n + 1 edges.

    Raises:
        InvalidShapeError: if n < 5.
    """
    if n < MIN_BN_ORDER:
        raise InvalidShapeError(f"B_n needs n >= {MIN_BN_ORDER}, got {n}")
    cycle = _cycle_edges(list(range(n - 1)))
    return Graph.from_edges(n, [*cycle, (1, n - 1), (n - 2, n - 1)])


def attach_pendant(g: Graph, at: int) -> Graph:
    """Attach a new vertex g.n adjacent only to a given vertex.

    Args:
        g: graph.
        at: attachment vertex.

    Returns:
        the graph with one more vertex and edge.
    """
    g.check_vertex(at)
    return g.add_vertex([at])


def dumbbell_junction_edges(shape: Dumbbell) -> list[tuple[Edge, int]]:
    """List the four cycle edges incident with the junction vertices.

    Args:
        shape: dumbbell shape.

    Returns:
        (edge oriented junction first, length of the cycle holding it) pairs.
    """
    first_cycle, _, second_cycle = _dumbbell_layout(shape)
    return [
        ((first_cycle[0], first_cycle[1]), shape.p),
        ((first_cycle[0], first_cycle[-1]), shape.p),
        ((second_cycle[0], second_cycle[1]), shape.q),
        ((second_cycle[0], second_cycle[-1]), shape.q),
    ]


def is_middle_edge(shape: Theta, edge: Edge) -> bool:
    """Check whether an edge is the middle edge of an odd hub-to-hub path.

    On a path of odd length L the middle edge joins the vertices at distances
    (L - 1) / 2 and (L + 1) / 2 from hub x.

    Args:
        shape: theta shape.
        edge: vertex pair.

    Returns:
        True for the middle edge of an odd path.
    """
    u, v = edge
    for path in theta_paths(shape):
        length = len(path) - 1
        if length % 2 == 0:
            continue
        middle = length // 2
        if {path[middle], path[middle + 1]} == {u, v}:
            return True
    return False


@functools.lru_cache(maxsize=256)
def _theta_context(shape: Theta) -> tuple[Graph, DistanceMatrix]:
    """Build and cache a theta graph with its distance matrix.

    Args:
        shape: theta shape.

    Returns:
        the graph and its distances.
    """
    graph = build_skeleton(shape)
    return graph, all_pairs_distances(graph)


def analyze_theta_edge(shape: Theta, edge: Edge) -> ThetaEdgeAnalysis:
    """Predict |n_u - n_v| of a theta edge from the placement of the hubs.

    Args:
        shape: theta shape; the graph is build_skeleton(shape).
        edge: vertex pair (u, v) of that graph.

    Returns:
        the case, its prediction and the measured value.
    """
    graph, distances = _theta_context(shape)
    partition = edge_partition(graph, edge, distances)
    u, v = edge

    def side(hub: int) -> int:
        """Get -1, 1 or 0 when the hub is closer to u, closer to v, or equidistant.

        Args:
            hub: hub vertex.

        Returns:
            the side marker.
        """
        d_u, d_v = distances[hub][u], distances[hub][v]
        return (d_u > d_v) - (d_u < d_v)

    x_side, y_side = side(0), side(1)
    common = {
        "edge": edge,
        "actual": abs(partition.deviation),
        "middle_of_odd_path": is_middle_edge(shape, edge),
    }
    if x_side == 0 or y_side == 0:
        return ThetaEdgeAnalysis(
            case=ThetaEdgeCase.HUB_EQUIDISTANT, predicted=shape.a - 1, **common
        )
    if x_side != y_side:
        a_i = min(distances[0][u], distances[0][v])
        b_i = min(distances[1][u], distances[1][v])
        return ThetaEdgeAnalysis(
            case=ThetaEdgeCase.DIFFERENT_SETS,
            a_i=a_i,
            b_i=b_i,
            predicted=abs(b_i - a_i),
            **common,
        )
    cycle_length = shortest_cycle_through_edge(graph, edge)
    return ThetaEdgeAnalysis(
        case=ThetaEdgeCase.SAME_SET,
        cycle_length=cycle_length,
        predicted=graph.n - cycle_length,
        **common,
    )
