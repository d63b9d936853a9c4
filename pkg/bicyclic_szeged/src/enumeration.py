# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Exhaustive generation of connected bicyclic graphs up to isomorphism.

Two independent generators are provided so they can validate each other:

* the naive generator walks every (n + 1)-subset of the edges of K_n;
* the structural generator grows every theta and dumbbell skeleton by grafting rooted
  trees on its vertices.

Both split their work into slices that run inline or on a process pool and merge the
per-slice canonical forms by set union, so the result never depends on the worker
count.
"""

import collections
import contextlib
import dataclasses
import enum
import functools
import itertools
import logging
import multiprocessing
import typing

import tqdm

from .canonical import canonical_form_from_adjacency
from .constructions import Dumbbell, Theta, build_skeleton
from .graph import Graph, reachable_mask
from .graph6 import from_graph6

logger = logging.getLogger(__name__)

MIN_ORDER = 4
MAX_NAIVE_ORDER = 9
MAX_STRUCTURAL_ORDER = 12

RootedTree = tuple["RootedTree", ...]


class EnumerationRangeError(ValueError):
    """The order is below the smallest bicyclic order."""


class BudgetExceededError(EnumerationRangeError):
    """The order is beyond the generator's combinatorial budget."""


class Method(str, enum.Enum):
    """Enumeration method.

    Attributes:
        NAIVE: all edge subsets of K_n.
        STRUCTURAL: skeletons with grafted trees.
    """

    NAIVE = "naive"
    STRUCTURAL = "structural"


@dataclasses.dataclass(frozen=True)
class IsoClassSet:
    """Isomorphism classes of connected bicyclic graphs of one order.

    Attributes:
        n: order of every member.
        forms: canonical forms, one per class.
    """

    n: int
    forms: frozenset[bytes]

    @property
    def count(self) -> int:
        """Number of classes."""
        return len(self.forms)

    def sorted_forms(self) -> list[bytes]:
        """Get the canonical forms in byte order.

        Returns:
            the sorted forms.
        """
        return sorted(self.forms)

    def graph6_lines(self) -> list[str]:
        """Get one graph6 line per class in canonical order.

        Returns:
            graph6 strings.
        """
        return [form.decode("ascii") for form in self.sorted_forms()]

    def representatives(self) -> list[Graph]:
        """Decode one representative graph per class in canonical order.

        Returns:
            the representatives.
        """
        return [from_graph6(line) for line in self.graph6_lines()]


def _check_order(n: int, maximum: int) -> None:
    """Check that an order is in the generator's range.

    Args:
        n: requested order.
        maximum: largest supported order.

    Raises:
        EnumerationRangeError: if n is below MIN_ORDER.
        BudgetExceededError: if n is above maximum.
    """
    if n < MIN_ORDER:
        raise EnumerationRangeError(f"no bicyclic graph has fewer than {MIN_ORDER} vertices")
    if n > maximum:
        raise BudgetExceededError(f"order {n} exceeds the budget of {maximum} vertices")


def _collect(
    worker: typing.Callable[[typing.Any], frozenset[bytes]],
    tasks: list[typing.Any],
    jobs: int,
    progress: bool,
    description: str,
) -> frozenset[bytes]:
    """Run the work slices and merge their canonical forms.

    Args:
        worker: picklable slice function.
        tasks: slice arguments.
        jobs: worker processes, 1 to run inline.
        progress: show a progress bar on stderr.
        description: progress bar label.

    Returns:
        the union of all slice results.
    """
    forms: set[bytes] = set()
    with contextlib.ExitStack() as stack:
        if jobs > 1:
            pool = stack.enter_context(multiprocessing.Pool(processes=jobs))
            results: typing.Iterable[frozenset[bytes]] = pool.imap_unordered(worker, tasks)
        else:
            results = map(worker, tasks)
        for part in tqdm.tqdm(
            results, total=len(tasks), desc=description, unit="slice", disable=not progress
        ):
            forms |= part
            logger.debug("%s: slice done, %d classes so far", description, len(forms))
    return frozenset(forms)


def _naive_slice(task: tuple[int, int]) -> frozenset[bytes]:
    """Canonical forms of the connected subsets whose smallest edge has a given index.

    Args:
        task: (order n, index of the first edge in the K_n edge list).

    Returns:
        the canonical forms found in the slice.
    """
    n, first = task
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    head_u, head_v = pairs[first]
    forms = set()
    for rest in itertools.combinations(pairs[first + 1 :], n):
        adjacency = [0] * n
        adjacency[head_u] = 1 << head_v
        adjacency[head_v] = 1 << head_u
        for u, v in rest:
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        if not all(adjacency) or reachable_mask(adjacency, 0) != full:
            continue
        forms.add(canonical_form_from_adjacency(n, adjacency))
    return frozenset(forms)


def enumerate_naive(n: int, jobs: int = 1, progress: bool = False) -> IsoClassSet:
    """Enumerate by filtering every (n + 1)-edge subset of K_n.

    Args:
        n: order, 4 <= n <= 9.
        jobs: worker processes.
        progress: show a progress bar.

    Returns:
        the isomorphism classes.
    """
    _check_order(n, MAX_NAIVE_ORDER)
    pair_count = n * (n - 1) // 2
    tasks = [(n, first) for first in range(pair_count - n)]
    logger.info("naive enumeration of order %d over %d slices", n, len(tasks))
    forms = _collect(_naive_slice, tasks, jobs, progress, f"naive n={n}")
    logger.info("naive enumeration of order %d found %d classes", n, len(forms))
    return IsoClassSet(n=n, forms=forms)


def skeletons(n: int) -> list[Theta | Dumbbell]:
    """List every skeleton shape with at most n vertices.

    Args:
        n: largest vertex count.

    Returns:
        theta shapes with a <= b <= c and b >= 2, then dumbbells with p <= q.
    """
    shapes: list[Theta | Dumbbell] = []
    for a in range(1, n):
        for b in range(max(a, 2), n):
            for c in range(b, n + 2 - a - b):
                shapes.append(Theta(a=a, b=b, c=c))
    for p in range(3, n):
        for q in range(p, n + 2 - p):
            for t in range(n + 2 - p - q):
                shapes.append(Dumbbell(p=p, q=q, t=t))
    return shapes


def _partitions(total: int, largest: int | None = None) -> typing.Iterator[tuple[int, ...]]:
    """Generate the integer partitions of a total in non-increasing order.

    Args:
        total: number to split.
        largest: bound on the first part.

    Yields:
        partitions as non-increasing tuples.
    """
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest or total), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part, *rest)


@functools.lru_cache(maxsize=None)
def rooted_trees(k: int) -> tuple[RootedTree, ...]:
    """Generate every unlabelled rooted tree with k vertices.

    A tree is the sorted tuple of its child subtrees, so equal trees compare equal.

    Args:
        k: vertex count, at least 1.

    Returns:
        the trees; the counts are 1, 1, 2, 4, 9, 20, 48, ...

    Raises:
        ValueError: if k < 1.
    """
    if k < 1:
        raise ValueError(f"a rooted tree needs at least one vertex, got {k}")
    if k == 1:
        return ((),)
    trees = []
    for partition in _partitions(k - 1):
        groups = [
            itertools.combinations_with_replacement(rooted_trees(size), count)
            for size, count in collections.Counter(partition).items()
        ]
        for choice in itertools.product(*groups):
            trees.append(tuple(sorted(child for group in choice for child in group)))
    return tuple(trees)


def _graft(edges: list[tuple[int, int]], root: int, tree: RootedTree, label: int) -> int:
    """Hang the children of a rooted tree below an existing vertex.

    Args:
        edges: edge list extended in place.
        root: vertex playing the tree root.
        tree: rooted tree.
        label: first unused vertex label.

    Returns:
        the next unused label.
    """
    for child in tree:
        edges.append((root, label))
        label = _graft(edges, label, child, label + 1)
    return label


def _compositions(total: int, parts: int) -> typing.Iterator[tuple[int, ...]]:
    """Generate the ordered splits of a total into non-negative parts.

    Args:
        total: number to split.
        parts: number of parts, at least 1.

    Yields:
        tuples of length parts summing to total.
    """
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1, *bars, total + parts - 1)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))


def _structural_slice(task: tuple[int, Theta | Dumbbell]) -> frozenset[bytes]:
    """Canonical forms of all graphs with a given skeleton.

    Args:
        task: (order n, skeleton shape with at most n vertices).

    Returns:
        the canonical forms found in the slice.
    """
    n, shape = task
    skeleton = build_skeleton(shape)
    forms = set()
    for sizes in _compositions(n - skeleton.n, skeleton.n):
        for trees in itertools.product(*(rooted_trees(size + 1) for size in sizes)):
            edges = list(skeleton.edges)
            label = skeleton.n
            for root, tree in enumerate(trees):
                label = _graft(edges, root, tree, label)
            adjacency = [0] * n
            for u, v in edges:
                adjacency[u] |= 1 << v
                adjacency[v] |= 1 << u
            forms.add(canonical_form_from_adjacency(n, adjacency))
    return frozenset(forms)


def enumerate_structural(n: int, jobs: int = 1, progress: bool = False) -> IsoClassSet:
    """Enumerate by grafting rooted trees on every skeleton.

    Args:
        n: order, 4 <= n <= 12.
        jobs: worker processes.
        progress: show a progress bar.

    Returns:
        the isomorphism classes.
    """
    _check_order(n, MAX_STRUCTURAL_ORDER)
    tasks = [(n, shape) for shape in skeletons(n)]
    logger.info("structural enumeration of order %d over %d skeletons", n, len(tasks))
    forms = _collect(_structural_slice, tasks, jobs, progress, f"structural n={n}")
    logger.info("structural enumeration of order %d found %d classes", n, len(forms))
    return IsoClassSet(n=n, forms=forms)


def enumerate_bicyclic(
    n: int, method: Method = Method.NAIVE, jobs: int = 1, progress: bool = False
) -> IsoClassSet:
    """Enumerate with the chosen method.

    Args:
        n: order.
        method: generator to use.
        jobs: worker processes.
        progress: show a progress bar.

    Returns:
        the isomorphism classes.
    """
    if Method(method) is Method.STRUCTURAL:
        return enumerate_structural(n, jobs=jobs, progress=progress)
    return enumerate_naive(n, jobs=jobs, progress=progress)
