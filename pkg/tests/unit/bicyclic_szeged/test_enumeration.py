# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Bicyclic enumeration unit tests."""

import pytest

from bicyclic_szeged.src import canonical, constructions, enumeration, graph
from bicyclic_szeged.src.constructions import Dumbbell, Theta
from bicyclic_szeged.src.enumeration import Method

CLASS_COUNTS = {4: 1, 5: 5, 6: 19, 7: 67}


def test_skeletons_small_orders() -> None:
    """
    arrange: none.
    act: list the skeletons with at most 4 and 5 vertices.
    assert: the exact shape lists, thetas before dumbbells.
    """
    assert enumeration.skeletons(4) == [Theta(a=1, b=2, c=2)]
    assert enumeration.skeletons(5) == [
        Theta(a=1, b=2, c=2),
        Theta(a=1, b=2, c=3),
        Theta(a=2, b=2, c=2),
        Dumbbell(p=3, q=3, t=0),
    ]


def test_skeletons_shapes_are_valid() -> None:
    """
    arrange: none.
    act: list the skeletons with at most 8 vertices.
    assert: every shape fits, no theta has two single-edge paths, and known shapes appear.
    """
    shapes = enumeration.skeletons(8)

    assert all(shape.vertex_count <= 8 for shape in shapes)
    assert not any(isinstance(shape, Theta) and shape.b == 1 for shape in shapes)
    assert len(set(shapes)) == len(shapes)
    assert Theta(a=2, b=2, c=3) in shapes
    assert Dumbbell(p=3, q=3, t=1) in shapes
    assert Dumbbell(p=3, q=4, t=2) in shapes


def test_rooted_tree_counts() -> None:
    """
    arrange: none.
    act: generate rooted trees with 1 to 7 vertices.
    assert: the counts of unlabelled rooted trees, without duplicates.
    """
    counts = [len(enumeration.rooted_trees(k)) for k in range(1, 8)]

    assert counts == [1, 1, 2, 4, 9, 20, 48]
    assert all(
        len(set(enumeration.rooted_trees(k))) == len(enumeration.rooted_trees(k))
        for k in range(1, 8)
    )


def test_rooted_trees_need_a_vertex() -> None:
    """
    arrange: none.
    act: generate rooted trees with no vertex.
    assert: ValueError is raised.
    """
    with pytest.raises(ValueError):
        enumeration.rooted_trees(0)


@pytest.mark.parametrize(
    "n, count", [pytest.param(n, count, id=f"n={n}") for n, count in CLASS_COUNTS.items()]
)
def test_naive_class_counts(n, count) -> None:
    """
    arrange: an order n.
    act: enumerate with the naive generator.
    assert: the number of connected bicyclic graphs up to isomorphism.
    """
    assert enumeration.enumerate_naive(n).count == count


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_generators_agree(n) -> None:
    """
    arrange: an order n.
    act: enumerate with both generators.
    assert: identical sets of canonical forms.
    """
    naive = enumeration.enumerate_naive(n)
    structural = enumeration.enumerate_structural(n)

    assert naive == structural
    assert structural.count == CLASS_COUNTS[n]


def test_representatives_are_bicyclic() -> None:
    """
    arrange: the classes of order 6.
    act: decode every representative.
    assert: each is connected with n + 1 edges and is its own canonical form.
    """
    classes = enumeration.enumerate_naive(6)

    for line, g in zip(classes.graph6_lines(), classes.representatives()):
        assert (g.n, g.m) == (6, 7)
        assert graph.is_connected(g)
        assert canonical.canonical_form(g).decode("ascii") == line


def test_named_families_are_members() -> None:
    """
    arrange: the classes of order 7.
    act: canonicalize B_7 and Theta(1,2,5).
    assert: both forms are members.
    """
    classes = enumeration.enumerate_structural(7)

    assert canonical.canonical_form(constructions.build_bn(7)) in classes.forms
    assert canonical.canonical_form(constructions.build_theta(1, 2, 5)) in classes.forms


def test_output_is_sorted() -> None:
    """
    arrange: the classes of order 5.
    act: list the graph6 lines.
    assert: they are in byte order of the canonical forms.
    """
    lines = enumeration.enumerate_naive(5).graph6_lines()

    assert lines == sorted(lines)
    assert len(lines) == 5


@pytest.mark.parametrize("method", [Method.NAIVE, Method.STRUCTURAL])
def test_worker_count_does_not_change_result(method) -> None:
    """
    arrange: an enumeration method.
    act: enumerate order 6 inline and on two and eight worker processes.
    assert: identical sorted output.
    """
    inline = enumeration.enumerate_bicyclic(6, method=method, jobs=1).graph6_lines()

    for jobs in (2, 8):
        pooled = enumeration.enumerate_bicyclic(6, method=method, jobs=jobs)
        assert pooled.graph6_lines() == inline


def test_method_given_as_text() -> None:
    """
    arrange: none.
    act: enumerate with the method given by its value.
    assert: the structural generator result.
    """
    result = enumeration.enumerate_bicyclic(5, method="structural")

    assert result == enumeration.enumerate_structural(5)


@pytest.mark.parametrize(
    "generator, n, error",
    [
        pytest.param(
            enumeration.enumerate_naive, 3, enumeration.EnumerationRangeError, id="naive too small"
        ),
        pytest.param(
            enumeration.enumerate_naive, 10, enumeration.BudgetExceededError, id="naive budget"
        ),
        pytest.param(
            enumeration.enumerate_structural,
            13,
            enumeration.BudgetExceededError,
            id="structural budget",
        ),
    ],
)
def test_order_range(generator, n, error) -> None:
    """
    arrange: an order outside the generator's range.
    act: enumerate.
    assert: the matching error is raised.
    """
    with pytest.raises(error):
        generator(n)


def test_too_small_is_not_a_budget_error() -> None:
    """
    arrange: none.
    act: enumerate order 3.
    assert: the error is a range error but not a budget error.
    """
    with pytest.raises(enumeration.EnumerationRangeError) as excinfo:
        enumeration.enumerate_structural(3)

    assert not isinstance(excinfo.value, enumeration.BudgetExceededError)


@pytest.mark.acceptance
def test_generators_agree_order_8() -> None:
    """
    arrange: none.
    act: enumerate order 8 with both generators on worker processes.
    assert: identical sets of 236 classes.
    """
    naive = enumeration.enumerate_naive(8, jobs=4)
    structural = enumeration.enumerate_structural(8, jobs=4)

    assert naive == structural
    assert naive.count == 236
