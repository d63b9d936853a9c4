# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Rendering of index records and verification reports as tables, CSV and JSON."""

import csv
import enum
import io
import json
import typing
from pathlib import Path

import jinja2
from pydantic import BaseModel, ConfigDict, Field, computed_field

from .graph import Graph, NotBicyclicError, classify_bicyclic
from .graph6 import to_graph6
from .indices import QuarterValue, summarize
from .verify import (
    ClosedFormReport,
    ConjectureReport,
    InequalityReport,
    ThetaEdgeReport,
    closed_form_passed,
    conjecture_passed,
    inequalities_passed,
    theta_edges_passed,
)

TEMPLATES_DIR = (Path(__file__).parent / "templates").absolute()

RECORD_COLUMNS = [
    "graph6",
    "n",
    "m",
    "wiener",
    "szeged",
    "revised_szeged_q4",
    "deviation_sum",
    "class",
]
CONJECTURE_COLUMNS = [
    "n",
    "method",
    "class_count",
    "max_q4",
    "bound_q4",
    "maximizer_is_bn",
    "maximizer_unique",
    "second_q4",
    "second_is_theta",
    "identity_holds",
    "passed",
]
THETA_EDGE_COLUMNS = [
    "edge",
    "case",
    "a_i",
    "b_i",
    "cycle_length",
    "predicted",
    "actual",
    "middle_of_odd_path",
    "holds",
]
INEQUALITY_COLUMNS = [
    "n",
    "graph6",
    "label",
    "is_bn",
    "deviation_sum",
    "case_bound",
    "junction_ok",
    "passed",
]
CLOSED_FORM_COLUMNS = [
    "n",
    "q4",
    "bound_q4",
    "deviation_sum",
    "expected_deviation_sum",
    "general_bound_q4",
    "holds",
]
PLOT_COLUMNS = ["n", "max_q4", "second_q4"]


class OutputFormat(str, enum.Enum):
    """Output format.

    Attributes:
        TABLE: aligned text for humans.
        CSV: comma separated values with a header row.
        JSON: an indented JSON array.
    """

    TABLE = "table"
    CSV = "csv"
    JSON = "json"


class ReportRecord(BaseModel):
    """Indices of one input graph.

    Attributes:
        model_config: Pydantic model configuration.
        graph6: graph6 encoding of the graph.
        n: vertex count.
        m: edge count.
        wiener: Wiener index.
        szeged: Szeged index.
        revised_szeged_q4: four times the revised Szeged index.
        deviation_sum: sum of squared edge deviations.
        bicyclic_class: bicyclic class tag, empty for graphs that are not bicyclic.
    """

    model_config = ConfigDict(populate_by_name=True, serialize_by_alias=True)
    graph6: str
    n: int = Field(ge=0)
    m: int = Field(ge=0)
    wiener: int
    szeged: int
    revised_szeged_q4: int
    deviation_sum: int
    bicyclic_class: str = Field(default="", alias="class")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def revised_szeged(self) -> str:
        """Revised Szeged index as "q/4"."""
        return QuarterValue(self.revised_szeged_q4).as_fraction_text()

    @property
    def revised_szeged_decimal(self) -> str:
        """Revised Szeged index as an exact decimal."""
        return str(QuarterValue(self.revised_szeged_q4))

    @classmethod
    def from_graph(cls, g: Graph) -> "ReportRecord":
        """Compute the record of a connected graph.

        Args:
            g: connected graph.

        Returns:
            the record.
        """
        summary = summarize(g)
        try:
            label = classify_bicyclic(g).label
        except NotBicyclicError:
            label = ""
        return cls(
            graph6=to_graph6(g),
            n=g.n,
            m=g.m,
            wiener=summary.wiener,
            szeged=summary.szeged,
            revised_szeged_q4=summary.revised_szeged.q,
            deviation_sum=summary.deviation_sum,
            bicyclic_class=label,
        )


def _environment() -> jinja2.Environment:
    """Create the template environment.

    Returns:
        the environment with the quarter value filter.
    """
    # not used for HTML
    templates = jinja2.Environment(
        loader=jinja2.FileSystemLoader(TEMPLATES_DIR),
        undefined=jinja2.StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
    )  # nosec
    templates.filters["quarter"] = lambda q: str(QuarterValue(q))
    return templates


def _render_template(name: str, **context: typing.Any) -> str:
    """Render one of the bundled templates.

    Args:
        name: template file name.
        context: template variables.

    Returns:
        the rendered text.
    """
    return _environment().get_template(name).render(**context)


def _render_csv(rows: list[dict[str, typing.Any]], columns: list[str]) -> str:
    """Write rows as CSV with a header.

    Args:
        rows: dictionaries keyed by column.
        columns: column order.

    Returns:
        the CSV text.
    """
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _render_json(items: list[dict[str, typing.Any]]) -> str:
    """Write items as an indented JSON array.

    Args:
        items: JSON-compatible dictionaries.

    Returns:
        the JSON text with a trailing newline.
    """
    return json.dumps(items, indent=2) + "\n"


def render_records(records: list[ReportRecord], output_format: OutputFormat) -> str:
    """Render index records.

    Args:
        records: records in input order.
        output_format: output format.

    Returns:
        the rendered text.
    """
    if output_format is OutputFormat.TABLE:
        return _render_template("records.txt.j2", records=records)
    rows = [record.model_dump(mode="json") for record in records]
    if output_format is OutputFormat.CSV:
        return _render_csv(rows, RECORD_COLUMNS)
    for row in rows:
        row["units"] = "/4"
    return _render_json(rows)


def render_conjecture(reports: list[ConjectureReport], output_format: OutputFormat) -> str:
    """Render maximizer reports, one per order.

    Args:
        reports: reports in order.
        output_format: output format.

    Returns:
        the rendered text.
    """
    items = [
        report.model_dump(mode="json")
        | {"identity_holds": report.identity_holds, "passed": conjecture_passed(report)}
        for report in reports
    ]
    if output_format is OutputFormat.TABLE:
        return _render_template("conjecture.txt.j2", items=items)
    if output_format is OutputFormat.CSV:
        return _render_csv(items, CONJECTURE_COLUMNS)
    return _render_json(items)


def render_theta_edges(report: ThetaEdgeReport, output_format: OutputFormat) -> str:
    """Render the per-edge analysis of a theta graph.

    Args:
        report: the report.
        output_format: output format.

    Returns:
        the rendered text.
    """
    item = report.model_dump(mode="json") | {"passed": theta_edges_passed(report)}
    if output_format is OutputFormat.TABLE:
        return _render_template("theta_edges.txt.j2", item=item)
    if output_format is OutputFormat.CSV:
        rows = [edge | {"edge": "-".join(map(str, edge["edge"]))} for edge in item["edges"]]
        return _render_csv(rows, THETA_EDGE_COLUMNS)
    return _render_json([item])


def render_inequalities(reports: list[InequalityReport], output_format: OutputFormat) -> str:
    """Render inequality reports, one per order.

    Args:
        reports: reports in order.
        output_format: output format.

    Returns:
        the rendered text.
    """
    items = [
        report.model_dump(mode="json") | {"passed": inequalities_passed(report)}
        for report in reports
    ]
    if output_format is OutputFormat.TABLE:
        return _render_template("inequalities.txt.j2", items=items)
    if output_format is OutputFormat.CSV:
        rows = [
            row | {"n": item["n"], "passed": row["graph6"] not in item["violators"]}
            for item in items
            for row in item["rows"]
        ]
        return _render_csv(rows, INEQUALITY_COLUMNS)
    return _render_json(items)


def render_closed_form(report: ClosedFormReport, output_format: OutputFormat) -> str:
    """Render the closed-form check of B_n.

    Args:
        report: the report.
        output_format: output format.

    Returns:
        the rendered text.
    """
    rows = [row.model_dump(mode="json") | {"holds": row.holds} for row in report.rows]
    if output_format is OutputFormat.TABLE:
        return _render_template(
            "closed_form.txt.j2", rows=rows, passed=closed_form_passed(report)
        )
    if output_format is OutputFormat.CSV:
        return _render_csv(rows, CLOSED_FORM_COLUMNS)
    return _render_json(rows)


def render_plot_data(reports: list[ConjectureReport]) -> str:
    """Render per-order maximum and second maximum for external plotting.

    Args:
        reports: maximizer reports.

    Returns:
        CSV with columns n, max_q4, second_q4.
    """
    return _render_csv([report.model_dump(mode="json") for report in reports], PLOT_COLUMNS)
