# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Machine checks of the extremal revised Szeged result for bicyclic graphs.

Every check returns a report model holding the full data; whether the check passed
is decided by a separate predicate so a failing run can still be rendered in full.
"""

import logging
import multiprocessing

from pydantic import BaseModel, ConfigDict

from .canonical import canonical_form
from .constructions import (
    Theta,
    ThetaEdgeAnalysis,
    ThetaEdgeCase,
    analyze_theta_edge,
    build_bn,
    build_dumbbell,
    build_skeleton,
    build_theta,
    dumbbell_junction_edges,
    dumbbell_shape,
    theta_shape,
)
from .enumeration import Method, enumerate_bicyclic, skeletons
from .graph import (
    CutVertexCase,
    PendantCase,
    ThetaCase,
    all_pairs_distances,
    classify_bicyclic,
)
from .graph6 import from_graph6
from .indices import (
    MIN_BICYCLIC_BOUND_ORDER,
    OutOfScopeError,
    bicyclic_identity_residual,
    conjecture_bound_x4,
    deviation_sum,
    edge_partition,
    expected_bn_deviation_sum,
    revised_szeged_upper_bound_x4,
    revised_szeged_x4,
    summarize,
)

logger = logging.getLogger(__name__)

MAX_ZERO_DEVIATION_EDGES = 3


class ClassRow(BaseModel):
    """Indices of one isomorphism class.

    Attributes:
        model_config: Pydantic model configuration.
        graph6: canonical form.
        label: bicyclic class tag.
        deviation_sum: sum of squared edge deviations.
        revised_szeged_q4: four times the revised Szeged index.
        identity_residual: bicyclic identity residual, 0 when it holds.
    """

    model_config = ConfigDict(frozen=True)
    graph6: str
    label: str
    deviation_sum: int
    revised_szeged_q4: int
    identity_residual: int


class ConjectureReport(BaseModel):
    """Outcome of the exhaustive maximizer check at one order.

    Attributes:
        n: order.
        method: enumeration method used.
        class_count: number of isomorphism classes.
        max_q4: largest 4 Sz*.
        bound_q4: conjectured maximum 4 Sz*.
        maximizers: classes attaining max_q4.
        maximizer_is_bn: the maximizers are exactly B_n.
        maximizer_unique: a single class attains max_q4.
        second_q4: second distinct 4 Sz* value.
        second_place: every class attaining second_q4.
        second_is_theta: the second place is exactly Theta(1,2,n-2).
        rows: per-class table sorted by canonical form.
    """

    n: int
    method: Method
    class_count: int
    max_q4: int
    bound_q4: int
    maximizers: list[str]
    maximizer_is_bn: bool
    maximizer_unique: bool
    second_q4: int | None
    second_place: list[str]
    second_is_theta: bool
    rows: list[ClassRow]

    @property
    def counterexample(self) -> bool:
        """Whether some class beats the conjectured bound."""
        return self.max_q4 > self.bound_q4

    @property
    def identity_holds(self) -> bool:
        """Whether every class satisfies the bicyclic identity."""
        return all(row.identity_residual == 0 for row in self.rows)


class ThetaEdgeReport(BaseModel):
    """Per-edge deviation analysis of one theta graph.

    Attributes:
        shape: the analysed shape.
        edges: one analysis per edge in edge order.
        zero_deviation_edges: edges with n_u = n_v.
        zero_iff_middle: zero deviation occurs exactly on middle edges of odd paths.
        hub_equality_observed: the smallest hub-equidistant deviation equals a - 1, or
            None without hub-equidistant edges.
        two_shortest_paths: a == b.
    """

    shape: Theta
    edges: list[ThetaEdgeAnalysis]
    zero_deviation_edges: list[tuple[int, int]]
    zero_iff_middle: bool
    hub_equality_observed: bool | None
    two_shortest_paths: bool


class InequalityRow(BaseModel):
    """Lower bounds on the deviation sum of one class.

    Attributes:
        model_config: Pydantic model configuration.
        graph6: canonical form.
        label: bicyclic class tag.
        is_bn: the class is B_n.
        deviation_sum: sum of squared edge deviations.
        case_bound: strongest case-specific lower bound, None for B_n.
        junction_ok: junction edges deviate by n - |C| and the dumbbell matches the
            class, None outside the cut-vertex case.
    """

    model_config = ConfigDict(frozen=True)
    graph6: str
    label: str
    is_bn: bool
    deviation_sum: int
    case_bound: int | None
    junction_ok: bool | None


class InequalityReport(BaseModel):
    """Deviation sum inequalities over all classes of one order.

    Attributes:
        n: order.
        bn_deviation_sum: measured deviation sum of B_n.
        expected_bn_deviation_sum: n for even n, n + 1 for odd n.
        rows: per-class rows sorted by canonical form.
        violators: classes breaking one of their inequalities.
    """

    n: int
    bn_deviation_sum: int
    expected_bn_deviation_sum: int
    rows: list[InequalityRow]
    violators: list[str]


class ClosedFormRow(BaseModel):
    """Closed-form check of B_n at one order.

    Attributes:
        model_config: Pydantic model configuration.
        n: order.
        q4: measured 4 Sz*(B_n).
        bound_q4: closed-form value.
        deviation_sum: measured deviation sum.
        expected_deviation_sum: n for even n, n + 1 for odd n.
        general_bound_q4: n^2 m, the bound for arbitrary connected graphs.
    """

    model_config = ConfigDict(frozen=True)
    n: int
    q4: int
    bound_q4: int
    deviation_sum: int
    expected_deviation_sum: int
    general_bound_q4: int

    @property
    def holds(self) -> bool:
        """Whether B_n matches the closed form and improves the general bound."""
        return (
            self.q4 == self.bound_q4
            and self.deviation_sum == self.expected_deviation_sum
            and self.bound_q4 < self.general_bound_q4
        )


class ClosedFormReport(BaseModel):
    """Closed-form check of B_n over a range of orders.

    Attributes:
        rows: one row per order.
    """

    rows: list[ClosedFormRow]


def _class_row(form: str) -> ClassRow:
    """Compute the indices of one class.

    Args:
        form: canonical graph6 form.

    Returns:
        the class row.
    """
    g = from_graph6(form)
    summary = summarize(g)
    return ClassRow(
        graph6=form,
        label=classify_bicyclic(g).label,
        deviation_sum=summary.deviation_sum,
        revised_szeged_q4=summary.revised_szeged.q,
        identity_residual=bicyclic_identity_residual(g),
    )


def _class_rows(forms: list[str], jobs: int) -> list[ClassRow]:
    """Compute class rows, on a process pool when jobs > 1.

    Args:
        forms: canonical forms in output order.
        jobs: worker processes.

    Returns:
        rows in the order of forms.
    """
    if jobs > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            return pool.map(_class_row, forms, chunksize=64)
    return [_class_row(form) for form in forms]


def _check_bound_order(n: int) -> None:
    """Check that an order is covered by the extremal bound.

    Args:
        n: order.

    Raises:
        OutOfScopeError: if n < 6.
    """
    if n < MIN_BICYCLIC_BOUND_ORDER:
        raise OutOfScopeError(f"the bicyclic bound is stated for n >= 6, got {n}")


def verify_conjecture(
    n: int, method: Method = Method.NAIVE, jobs: int = 1, progress: bool = False
) -> ConjectureReport:
    """Check that B_n uniquely maximizes Sz* over all bicyclic graphs of order n.

    Args:
        n: order, at least 6 and within the enumeration budget.
        method: enumeration method.
        jobs: worker processes.
        progress: show a progress bar.

    Returns:
        the report, also for a failing run.
    """
    _check_bound_order(n)
    classes = enumerate_bicyclic(n, method=method, jobs=jobs, progress=progress)
    rows = _class_rows(classes.graph6_lines(), jobs)
    values = sorted({row.revised_szeged_q4 for row in rows}, reverse=True)
    max_q4 = values[0]
    second_q4 = values[1] if len(values) > 1 else None
    maximizers = [row.graph6 for row in rows if row.revised_szeged_q4 == max_q4]
    second_place = [row.graph6 for row in rows if row.revised_szeged_q4 == second_q4]
    bn_form = canonical_form(build_bn(n)).decode("ascii")
    theta_form = canonical_form(build_theta(1, 2, n - 2)).decode("ascii")
    report = ConjectureReport(
        n=n,
        method=method,
        class_count=classes.count,
        max_q4=max_q4,
        bound_q4=conjecture_bound_x4(n).q,
        maximizers=maximizers,
        maximizer_is_bn=maximizers == [bn_form],
        maximizer_unique=len(maximizers) == 1,
        second_q4=second_q4,
        second_place=second_place,
        second_is_theta=second_place == [theta_form],
        rows=rows,
    )
    if report.counterexample:
        logger.warning(
            "counterexample at n=%d: 4Sz*=%d exceeds the bound %d for %s",
            n,
            report.max_q4,
            report.bound_q4,
            ", ".join(maximizers),
        )
    elif conjecture_passed(report):
        logger.info("n=%d: B_n is the unique maximizer over %d classes", n, classes.count)
    else:
        logger.warning("n=%d: maximizer check failed", n)
    return report


def conjecture_passed(report: ConjectureReport) -> bool:
    """Decide whether a maximizer report confirms the result.

    Args:
        report: the report.

    Returns:
        True if the bound is attained only by B_n, Theta(1,2,n-2) alone is second and
        every class satisfies the bicyclic identity.
    """
    return (
        report.max_q4 == report.bound_q4
        and report.maximizer_is_bn
        and report.second_is_theta
        and report.identity_holds
    )


def verify_theta_edges(a: int, b: int, c: int) -> ThetaEdgeReport:
    """Analyse every edge of Theta(a, b, c).

    Args:
        a: shortest path length.
        b: middle path length.
        c: longest path length.

    Returns:
        the per-edge report.
    """
    shape = theta_shape(a, b, c)
    return _theta_edge_report(shape)


def _theta_edge_report(shape: Theta) -> ThetaEdgeReport:
    """Build the edge report of a validated shape.

    Args:
        shape: theta shape.

    Returns:
        the per-edge report.
    """
    edges = [analyze_theta_edge(shape, edge) for edge in build_skeleton(shape).edges]
    zero = [analysis.edge for analysis in edges if analysis.actual == 0]
    hub_equidistant = [
        analysis.actual for analysis in edges if analysis.case is ThetaEdgeCase.HUB_EQUIDISTANT
    ]
    report = ThetaEdgeReport(
        shape=shape,
        edges=edges,
        zero_deviation_edges=zero,
        zero_iff_middle=all(
            (analysis.actual == 0) == analysis.middle_of_odd_path for analysis in edges
        ),
        hub_equality_observed=(
            min(hub_equidistant) == shape.a - 1 if hub_equidistant else None
        ),
        two_shortest_paths=shape.a == shape.b,
    )
    if not theta_edges_passed(report):
        logger.warning("%s: edge deviation formulas do not hold", shape)
    return report


def theta_edges_passed(report: ThetaEdgeReport) -> bool:
    """Decide whether every edge matches its case formula.

    Args:
        report: the report.

    Returns:
        True if every case formula holds, zero deviation marks exactly the middle
        edges of odd paths and at most three edges have zero deviation.
    """
    return (
        all(analysis.holds for analysis in report.edges)
        and report.zero_iff_middle
        and len(report.zero_deviation_edges) <= MAX_ZERO_DEVIATION_EDGES
    )


def sweep_theta_edges(max_total: int) -> list[ThetaEdgeReport]:
    """Analyse every theta graph with a + b + c <= max_total.

    Args:
        max_total: largest sum of the path lengths.

    Returns:
        one report per shape.
    """
    shapes = [shape for shape in skeletons(max_total - 1) if isinstance(shape, Theta)]
    logger.info("sweeping %d theta shapes", len(shapes))
    return [_theta_edge_report(shape) for shape in shapes]


def _theta_case_bound(case: ThetaCase, m: int) -> int | None:
    """Lower bound on the deviation sum of a 2-connected class.

    Args:
        case: theta classification.
        m: edge count.

    Returns:
        the bound for its (a, b) case, None for Theta(2, 2, c) which is B_n.
    """
    if case.a >= 3:
        return m + 15
    if case.a == 2:
        return m + 10 if case.b > 2 else None
    return m + 9 if case.b >= 3 else m + 4


def _junction_ok(form: str, case: CutVertexCase) -> bool:
    """Check the junction edges of the dumbbell behind a cut-vertex class.

    Args:
        form: canonical form of the class.
        case: cut-vertex classification.

    Returns:
        True if the dumbbell is isomorphic to the class and each junction edge uw of a
        cycle C has n_u - n_w = n - |C|.
    """
    shape = dumbbell_shape(*case.dumbbell)
    dumbbell = build_dumbbell(*case.dumbbell)
    if canonical_form(dumbbell).decode("ascii") != form:
        return False
    distances = all_pairs_distances(dumbbell)
    return all(
        edge_partition(dumbbell, edge, distances).deviation == dumbbell.n - length
        for edge, length in dumbbell_junction_edges(shape)
    )


def _inequality_row(form: str, bn_form: str) -> InequalityRow:
    """Compute the inequality row of one class.

    Args:
        form: canonical form of the class.
        bn_form: canonical form of B_n.

    Returns:
        the row.
    """
    g = from_graph6(form)
    case = classify_bicyclic(g)
    case_bound = None
    junction_ok = None
    if isinstance(case, PendantCase):
        case_bound = (g.n - 2) ** 2
    elif isinstance(case, CutVertexCase):
        case_bound = (g.n - 1 + case.dumbbell[2]) ** 2
        junction_ok = _junction_ok(form, case)
    elif form != bn_form:
        case_bound = _theta_case_bound(case, g.m)
    return InequalityRow(
        graph6=form,
        label=case.label,
        is_bn=form == bn_form,
        deviation_sum=deviation_sum(g),
        case_bound=case_bound,
        junction_ok=junction_ok,
    )


def _row_holds(row: InequalityRow, n: int) -> bool:
    """Check the inequalities of one row.

    Args:
        row: inequality row.
        n: order.

    Returns:
        True if every applicable inequality holds.
    """
    if row.is_bn:
        return row.deviation_sum == expected_bn_deviation_sum(n)
    return (
        row.deviation_sum > n + 1
        and (row.case_bound is None or row.deviation_sum >= row.case_bound)
        and row.junction_ok is not False
    )


def verify_case_inequalities(
    n: int, method: Method = Method.NAIVE, jobs: int = 1, progress: bool = False
) -> InequalityReport:
    """Check the deviation sum inequalities behind the maximizer result.

    Args:
        n: order, at least 6 and within the enumeration budget.
        method: enumeration method.
        jobs: worker processes.
        progress: show a progress bar.

    Returns:
        the report listing any violators.
    """
    _check_bound_order(n)
    classes = enumerate_bicyclic(n, method=method, jobs=jobs, progress=progress)
    bn = build_bn(n)
    bn_form = canonical_form(bn).decode("ascii")
    rows = [_inequality_row(form, bn_form) for form in classes.graph6_lines()]
    violators = [row.graph6 for row in rows if not _row_holds(row, n)]
    for form in violators:
        logger.warning("n=%d: %s violates its deviation sum inequality", n, form)
    return InequalityReport(
        n=n,
        bn_deviation_sum=deviation_sum(bn),
        expected_bn_deviation_sum=expected_bn_deviation_sum(n),
        rows=rows,
        violators=violators,
    )


def inequalities_passed(report: InequalityReport) -> bool:
    """Decide whether every class satisfies its inequalities.

    Args:
        report: the report.

    Returns:
        True without violators and with the expected B_n deviation sum.
    """
    return not report.violators and report.bn_deviation_sum == report.expected_bn_deviation_sum


def verify_closed_form(low: int, high: int) -> ClosedFormReport:
    """Check 4 Sz*(B_n) against the closed form for every order in a range.

    Args:
        low: smallest order, at least 6.
        high: largest order.

    Returns:
        one row per order.

    Raises:
        OutOfScopeError: if low < 6 or the range is empty.
    """
    _check_bound_order(low)
    if high < low:
        raise OutOfScopeError(f"empty order range {low}..{high}")
    rows = []
    for n in range(low, high + 1):
        bn = build_bn(n)
        rows.append(
            ClosedFormRow(
                n=n,
                q4=revised_szeged_x4(bn).q,
                bound_q4=conjecture_bound_x4(n).q,
                deviation_sum=deviation_sum(bn),
                expected_deviation_sum=expected_bn_deviation_sum(n),
                general_bound_q4=revised_szeged_upper_bound_x4(bn).q,
            )
        )
    failed = [row.n for row in rows if not row.holds]
    if failed:
        logger.warning("closed form fails for n in %s", failed)
    return ClosedFormReport(rows=rows)


def closed_form_passed(report: ClosedFormReport) -> bool:
    """Decide whether every order matches the closed form.

    Args:
        report: the report.

    Returns:
        True if every row holds.
    """
    return all(row.holds for row in report.rows)
