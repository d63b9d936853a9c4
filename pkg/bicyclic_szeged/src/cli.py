# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command line interface."""

import argparse
import enum
import logging
import sys
import typing
from pathlib import Path

import pydantic
from pydantic import BaseModel, Field, field_validator, model_validator

from . import constructions, enumeration, report, verify
from .graph import GraphError, NotConnectedError, is_connected
from .graph6 import from_graph6, to_graph6
from .indices import OutOfScopeError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
MAX_JOBS = 256
SHAPE_HINTS = {
    "bn": "construct bn N with N >= 5",
    "theta": "construct theta A B C with 1 <= A <= B <= C and B >= 2",
    "dumbbell": "construct dumbbell P Q T with P, Q >= 3 and T >= 0",
}


class ExitCode(enum.IntEnum):
    """Process exit status.

    Attributes:
        OK: every check passed.
        FAILED: a check failed or a counterexample was found.
        USAGE: invalid arguments or input.
        BUDGET: the order is beyond the enumeration budget.
    """

    OK = 0
    FAILED = 1
    USAGE = 2
    BUDGET = 3


class UsageError(Exception):
    """The command line arguments are invalid."""


class RunOptions(BaseModel):
    """Options shared by every command.

    Attributes:
        output_format: rendering of the results.
        output: file receiving the results, standard output when unset.
        log_level: stderr logging level.
    """

    output_format: report.OutputFormat = report.OutputFormat.TABLE
    output: Path | None = None
    log_level: str = "WARNING"

    @field_validator("log_level", mode="before")
    @classmethod
    def _coerce_log_level(cls, value: str) -> str:
        """Normalize the logging level name.

        Args:
            value: level name in any case.

        Returns:
            the upper case level name.

        Raises:
            ValueError: if the level is unknown.
        """
        level = str(value).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value}")
        return level


class EnumerateOptions(RunOptions):
    """Options of the commands that enumerate graphs.

    Attributes:
        method: enumeration method.
        jobs: worker processes.
        progress: show a progress bar on stderr.
    """

    method: enumeration.Method = enumeration.Method.NAIVE
    jobs: int = Field(default=1, ge=1, le=MAX_JOBS)
    progress: bool = False


class VerifyOptions(EnumerateOptions):
    """Options of the verify command over a range of orders.

    Attributes:
        low: smallest order.
        high: largest order, low when unset.
        plot: file receiving per-order max and second max values as CSV.
    """

    low: int = Field(ge=1)
    high: int | None = None
    plot: Path | None = None

    @model_validator(mode="after")
    def _check_range(self) -> "VerifyOptions":
        """Default high to low and require low <= high.

        Returns:
            the validated options.
        """
        if self.high is None:
            self.high = self.low
        if self.high < self.low:
            raise ValueError("high must not be smaller than low")
        return self

    @property
    def orders(self) -> range:
        """Orders to check."""
        return range(self.low, (self.high or self.low) + 1)


OptionsT = typing.TypeVar("OptionsT", bound=RunOptions)


def _options(model: type[OptionsT], args: argparse.Namespace) -> OptionsT:
    """Validate parsed arguments into an options model.

    Args:
        model: options model.
        args: parsed arguments.

    Returns:
        the options.

    Raises:
        UsageError: if the arguments are invalid.
    """
    try:
        return model.model_validate(vars(args))
    except pydantic.ValidationError as exc:
        errors = exc.errors()
        error_fields = [str(e["loc"][0]) for e in errors if e.get("loc")] or ["arguments"]
        raise UsageError(f"invalid options: {', '.join(error_fields)}") from exc


def _write(text: str, output: Path | None) -> None:
    """Write results to a file or standard output.

    Args:
        text: rendered results.
        output: target file, standard output when None.
    """
    if text and not text.endswith("\n"):
        text += "\n"
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        output.write_text(text, encoding="utf-8")


def _read_lines(path: Path | None) -> list[str]:
    """Read newline-delimited input.

    Args:
        path: input file, standard input when None.

    Returns:
        the lines without line terminators.
    """
    if path is None:
        return sys.stdin.read().splitlines()
    return path.read_text(encoding="utf-8").splitlines()


def cmd_compute(args: argparse.Namespace) -> ExitCode:
    """Compute the indices of every graph6 line.

    Args:
        args: parsed arguments.

    Returns:
        USAGE if some line was rejected, OK otherwise.
    """
    options = _options(RunOptions, args)
    records = []
    rejected = 0
    for number, line in enumerate(_read_lines(args.file), start=1):
        if not line.strip():
            continue
        try:
            g = from_graph6(line)
            if not is_connected(g):
                raise NotConnectedError("graph is not connected")
        except GraphError as exc:
            logger.error("line %d: %s", number, exc)
            rejected += 1
            continue
        records.append(report.ReportRecord.from_graph(g))
    _write(report.render_records(records, options.output_format), options.output)
    logger.info("computed %d records, rejected %d lines", len(records), rejected)
    return ExitCode.USAGE if rejected else ExitCode.OK


def cmd_construct(args: argparse.Namespace) -> ExitCode:
    """Emit the graph6 encoding of a named construction.

    Args:
        args: parsed arguments.

    Returns:
        OK.

    Raises:
        UsageError: if the parameters do not describe a valid shape.
    """
    options = _options(RunOptions, args)
    try:
        if args.family == "bn":
            g = constructions.build_bn(args.n)
        elif args.family == "theta":
            g = constructions.build_theta(args.a, args.b, args.c)
        else:
            g = constructions.build_dumbbell(args.p, args.q, args.t)
    except constructions.InvalidShapeError as exc:
        raise UsageError(f"{exc}; usage: {SHAPE_HINTS[args.family]}") from exc
    _write(to_graph6(g), options.output)
    return ExitCode.OK


def cmd_enumerate(args: argparse.Namespace) -> ExitCode:
    """Emit one graph6 line per isomorphism class, sorted by canonical form.

    Args:
        args: parsed arguments.

    Returns:
        OK.
    """
    options = _options(EnumerateOptions, args)
    classes = enumeration.enumerate_bicyclic(
        args.n, method=options.method, jobs=options.jobs, progress=options.progress
    )
    _write("\n".join(classes.graph6_lines()), options.output)
    return ExitCode.OK


def _verify_range(args: argparse.Namespace) -> ExitCode:
    """Run the conjecture, inequality or closed-form check over a range of orders.

    Args:
        args: parsed arguments.

    Returns:
        OK if every order passed, FAILED otherwise.
    """
    options = _options(VerifyOptions, args)
    run = {"method": options.method, "jobs": options.jobs, "progress": options.progress}
    if args.target == "conjecture":
        reports = [verify.verify_conjecture(n, **run) for n in options.orders]
        if options.plot is not None:
            options.plot.write_text(report.render_plot_data(reports), encoding="utf-8")
        text = report.render_conjecture(reports, options.output_format)
        passed = all(verify.conjecture_passed(item) for item in reports)
    elif args.target == "inequalities":
        inequality_reports = [verify.verify_case_inequalities(n, **run) for n in options.orders]
        text = report.render_inequalities(inequality_reports, options.output_format)
        passed = all(verify.inequalities_passed(item) for item in inequality_reports)
    else:
        closed_form = verify.verify_closed_form(options.low, options.orders[-1])
        text = report.render_closed_form(closed_form, options.output_format)
        passed = verify.closed_form_passed(closed_form)
    _write(text, options.output)
    return ExitCode.OK if passed else ExitCode.FAILED


def cmd_verify(args: argparse.Namespace) -> ExitCode:
    """Run one of the verification targets.

    Args:
        args: parsed arguments.

    Returns:
        OK if every check passed, FAILED otherwise.

    Raises:
        UsageError: if the theta shape is invalid.
    """
    if args.target != "theta-edges":
        return _verify_range(args)
    options = _options(RunOptions, args)
    try:
        theta_report = verify.verify_theta_edges(args.a, args.b, args.c)
    except constructions.InvalidShapeError as exc:
        raise UsageError(f"{exc}; usage: verify theta-edges A B C") from exc
    _write(report.render_theta_edges(theta_report, options.output_format), options.output)
    return ExitCode.OK if verify.theta_edges_passed(theta_report) else ExitCode.FAILED


def _parser() -> argparse.ArgumentParser:
    """Build the argument parser.

    Returns:
        the parser.
    """
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format",
        dest="output_format",
        choices=[item.value for item in report.OutputFormat],
        default="table",
        help="output format",
    )
    output.add_argument("--output", type=Path, help="write results to FILE instead of stdout")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument(
        "--method",
        choices=[item.value for item in enumeration.Method],
        default="naive",
        help="enumeration method",
    )
    search.add_argument("--jobs", type=int, default=1, help="worker processes")
    search.add_argument("--progress", action="store_true", help="show a progress bar")

    parser = argparse.ArgumentParser(
        prog="bicyclic-szeged",
        description="Revised Szeged index of bicyclic graphs: computation and verification.",
    )
    parser.add_argument("--log-level", default="WARNING", help="stderr logging level")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[output], help="indices of graph6 input")
    compute.add_argument("file", nargs="?", type=Path, help="graph6 file, stdin by default")
    compute.set_defaults(handler=cmd_compute)

    construct = commands.add_parser("construct", help="named constructions")
    families = construct.add_subparsers(dest="family", required=True)
    bn = families.add_parser("bn", parents=[output], help="B_n")
    bn.add_argument("n", type=int)
    theta = families.add_parser("theta", parents=[output], help="Theta(a,b,c)")
    for name in ("a", "b", "c"):
        theta.add_argument(name, type=int)
    dumbbell = families.add_parser("dumbbell", parents=[output], help="Dumbbell(p,q,t)")
    for name in ("p", "q", "t"):
        dumbbell.add_argument(name, type=int)
    construct.set_defaults(handler=cmd_construct)

    enumerate_ = commands.add_parser(
        "enumerate", parents=[output, search], help="bicyclic classes as graph6"
    )
    enumerate_.add_argument("n", type=int)
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify_ = commands.add_parser("verify", help="verification targets")
    targets = verify_.add_subparsers(dest="target", required=True)
    for target, helptext in (
        ("conjecture", "B_n is the unique maximizer"),
        ("inequalities", "deviation sum lower bounds"),
        ("closed-form", "closed form of B_n"),
    ):
        parents = [output] if target == "closed-form" else [output, search]
        ranged = targets.add_parser(target, parents=parents, help=helptext)
        ranged.add_argument("low", type=int)
        ranged.add_argument("high", type=int, nargs="?")
        if target == "conjecture":
            ranged.add_argument("--plot", type=Path, help="write n,max_q4,second_q4 CSV")
    edges = targets.add_parser(
        "theta-edges", aliases=["lemma3"], parents=[output], help="per-edge deviations"
    )
    for name in ("a", "b", "c"):
        edges.add_argument(name, type=int)
    edges.set_defaults(target="theta-edges")
    verify_.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the command line interface.

    Args:
        argv: arguments without the program name, sys.argv by default.

    Returns:
        the process exit status.
    """
    args = _parser().parse_args(argv)
    level = str(args.log_level).upper()
    logging.basicConfig(
        level=level if level in LOG_LEVELS else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except enumeration.BudgetExceededError as exc:
        logger.error("%s", exc)
        return ExitCode.BUDGET
    except (
        UsageError,
        GraphError,
        OutOfScopeError,
        enumeration.EnumerationRangeError,
        constructions.InvalidShapeError,
    ) as exc:
        logger.error("%s", exc)
        return ExitCode.USAGE
