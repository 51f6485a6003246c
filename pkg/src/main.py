#!/usr/bin/env python3
"""Command-line surface of the regular-space max-flow solver

    python -m src.main [--log-level L] [--allow-large] COMMAND ...

Exit status 0 on success, 1 on user-side errors (bad input, guards, a
non-TU matrix), 2 when a theoretical invariant breaks at runtime.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .formats import load_instance, serialize_trace
from .mcp.server import build_mcp_server
from .models.modes import OracleKind, SolveStatus, SpaceMode
from .models.rational import to_fraction
from .services.reference import lp_reference_solve
from .services.regular_space import (
    conformal_decomposition,
    enumerate_circuits,
    find_tu_violation,
)
from .services.settings import get_settings
from .services.solver import analyze_trace, compare_oracles, max_flow
from .utils.exceptions import (
    InputValidationError,
    InvariantViolationError,
    UnboundedProblemError,
    exit_code_for,
)
from .utils.logging import configure_logging

logger = logging.getLogger(__name__)


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting with argparse's status 2"""

    def error(self, message: str):
        raise InputValidationError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="regflow",
        description="Shortest augmenting path max-flow over regular spaces",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="default from REGFLOW_LOG_LEVEL",
    )
    parser.add_argument(
        "--allow-large",
        action="store_true",
        help="lift the desk-scale size guards (logs a warning)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def instance_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("path", type=Path, help="instance or DIMACS file")
        sub.add_argument(
            "--format",
            choices=["auto", "instance", "dimacs"],
            default="auto",
            help="input format",
        )
        sub.add_argument(
            "--mode",
            choices=[m.value for m in SpaceMode],
            default=None,
            help="flow (kernel) or coflow (rowspace) reading of a DIMACS digraph",
        )
        return sub

    solve = instance_command("solve", "run Ford-Fulkerson with shortest augmenting paths")
    solve.add_argument(
        "--oracle", choices=[k.value for k in OracleKind], default=None, help="path oracle"
    )
    solve.add_argument("--trace", type=Path, default=None, help="write the trace here")
    solve.add_argument(
        "--summary", action="store_true", help="print augmentation counts against the bounds"
    )

    instance_command("reference", "exact LP optimum, independent of augmenting paths")

    verify = instance_command("verify-tu", "exhaustive total unimodularity check")
    verify.add_argument("--max-size", type=int, default=None, help="size guard on min(R, C)")

    instance_command("circuits", "list the circuits of the space")

    decompose = instance_command("decompose", "conformal decomposition of a member vector")
    decompose.add_argument(
        "--vector", required=True, help="components separated by spaces or commas"
    )

    compare = instance_command("compare-oracles", "generic oracle against a graph oracle")
    compare.add_argument(
        "--oracle",
        choices=[OracleKind.GRAPHIC.value, OracleKind.COGRAPHIC.value],
        default=None,
        help="specialized oracle (default follows the mode)",
    )

    commands.add_parser("serve", help="expose the solver as MCP tools over stdio")
    return parser


def _load(args):
    mode = SpaceMode(args.mode) if args.mode else None
    return load_instance(args.path, args.format, mode)


def _prefill_circuits(instance, allow_large: bool) -> None:
    if allow_large:
        instance.space.circuits(override=True)


def cmd_solve(args, out) -> int:
    instance, graph = _load(args)
    _prefill_circuits(instance, args.allow_large)
    oracle = OracleKind(args.oracle) if args.oracle else get_settings().default_oracle
    result = max_flow(instance, oracle, allow_large=args.allow_large)
    if result.status == SolveStatus.UNBOUNDED:
        print("objective unbounded", file=out)
    else:
        print(f"objective {result.objective}", file=out)
    print(f"augmentations {len(result.trace)}", file=out)
    if graph is not None:
        print(f"return-arc {instance.r + 1}", file=out)
    if args.summary:
        summary = analyze_trace(result.trace, instance)
        print(f"bound-squared {summary.squared_ground_bound}", file=out)
        if summary.vertex_arc_bound is not None:
            print(f"bound-vertex-arc {summary.vertex_arc_bound}", file=out)
        print(f"nonconformal {summary.nonconformal_augmentations}", file=out)
        print(f"longest-conformal-run {summary.longest_conformal_run}", file=out)
        print(f"lengths {' '.join(str(n) for n in result.trace.lengths)}", file=out)
    if args.trace is not None:
        args.trace.write_text(serialize_trace(result.trace), encoding="utf-8")
    return 0


def cmd_reference(args, out) -> int:
    instance, _ = _load(args)
    try:
        value = lp_reference_solve(instance, override=args.allow_large)
    except UnboundedProblemError:
        print("objective unbounded", file=out)
        return 0
    print(f"objective {value}", file=out)
    return 0


def cmd_verify_tu(args, out) -> int:
    instance, _ = _load(args)
    violation = find_tu_violation(
        instance.space.generator, args.max_size, override=args.allow_large
    )
    if violation is None:
        print("TU", file=out)
        return 0
    print(f"NOT TU ({violation.describe()})", file=out)
    return 1


def cmd_circuits(args, out) -> int:
    instance, _ = _load(args)
    for circuit in enumerate_circuits(instance.space, override=args.allow_large):
        print(circuit.format(), file=out)
    return 0


def parse_vector(text: str) -> List:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise InputValidationError("empty vector")
    try:
        return [to_fraction(token) for token in tokens]
    except ValueError as exc:
        raise InputValidationError(str(exc))


def cmd_decompose(args, out) -> int:
    instance, _ = _load(args)
    for summand in conformal_decomposition(parse_vector(args.vector), instance.space):
        print(summand.format(), file=out)
    return 0


def cmd_compare_oracles(args, out) -> int:
    instance, _ = _load(args)
    _prefill_circuits(instance, args.allow_large)
    if args.oracle:
        kind = OracleKind(args.oracle)
    elif instance.mode == SpaceMode.KERNEL:
        kind = OracleKind.GRAPHIC
    else:
        kind = OracleKind.COGRAPHIC
    comparison = compare_oracles(instance, kind, allow_large=args.allow_large)

    def show(length: Optional[int]) -> str:
        return "none" if length is None else str(length)

    for item in comparison.iterations:
        print(
            f"iteration {item.iteration} generic {show(item.generic_length)} "
            f"{kind.value} {show(item.specialized_length)}",
            file=out,
        )
    print(
        f"objective generic {comparison.generic_objective} "
        f"{kind.value} {comparison.specialized_objective}",
        file=out,
    )
    if not comparison.agree:
        raise InvariantViolationError(
            f"generic and {kind.value} oracles disagree", comparison.model_dump(mode="json")
        )
    print("agree", file=out)
    return 0


def cmd_serve(args, out) -> int:
    build_mcp_server().run()
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "reference": cmd_reference,
    "verify-tu": cmd_verify_tu,
    "circuits": cmd_circuits,
    "decompose": cmd_decompose,
    "compare-oracles": cmd_compare_oracles,
    "serve": cmd_serve,
}


def run_cli(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Run one command; returns the exit status instead of exiting"""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level or get_settings().log_level)
        if args.allow_large:
            logger.warning("desk-scale size guards lifted")
        return COMMANDS[args.command](args, out)
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else 0
    except Exception as exc:
        print(f"error: {exc}", file=err)
        return exit_code_for(exc)


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
