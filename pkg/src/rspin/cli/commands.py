"""Subcommand implementations.

Each command takes the parsed arguments and the engine configuration and
returns a CommandOutcome; printing is left to the entrypoint.
"""
import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict

from rspin.config import EngineConfig
from rspin.correlators import (
    FORMAL,
    NUMERIC,
    CorrelatorTable,
    FilesystemTableSource,
    seed_genus0_wk,
    verify_change_of_variables,
    verify_small_phase_space,
)
from rspin.descent import TypeTuple, descent_closed_form, virtual_degree
from rspin.diffalg.scalar import format_rational
from rspin.hierarchy import build_lax, check_flow_grid, flow_standard, flow_tilde
from rspin.infrastructure.renderers.specs import Document
from rspin.psido import rth_root

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Invalid flag combination detected after parsing."""


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    document: Document


def _outcome(command: str, lines, data, exit_code: int = EXIT_OK) -> CommandOutcome:
    return CommandOutcome(exit_code, {"command": command, "lines": list(lines), "data": data})


def cmd_root(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    depth = args.depth if args.depth is not None else args.r + config.depth_offset
    lax = build_lax(args.r)
    root = rth_root(lax.op, depth)
    data = {
        "r": args.r,
        "depth": depth,
        "lax": str(lax),
        "root": str(root),
        "watermark": root.watermark,
        "coefficients": {str(order): str(poly) for order, poly in root.items()},
    }
    return _outcome("root", [f"Q = {lax}", f"Q^(1/{args.r}) = {root}"], data)


def cmd_flow(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    has_tilde = args.tilde_index is not None
    has_pair = args.a is not None or args.m is not None
    if has_tilde == has_pair:
        raise UsageError("flow needs either --tilde-index or both --a and --m")
    if has_pair and (args.a is None or args.m is None):
        raise UsageError("--a and --m must be given together")
    lax = build_lax(args.r)
    if has_tilde:
        result = flow_tilde(lax, args.tilde_index, args.depth, config.depth_offset)
    else:
        result = flow_standard(lax, args.a, args.m, args.depth, config.depth_offset)
    return _outcome("flow", result.equations(), result.to_dict())


def cmd_check_flows(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    report = check_flow_grid(args.r, args.max_a, args.depth, config.depth_offset)
    exit_code = EXIT_OK if report.passed else EXIT_FAILED
    return _outcome("check-flows", report.lines(), report.to_dict(), exit_code)


def cmd_descent(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    closed = descent_closed_form(TypeTuple(tuple(args.mtilde), args.r))
    lines = []
    for entry in closed.factors:
        line = (
            f"position {entry.position}: mtilde={entry.mtilde} a={entry.a} m={entry.m} "
            f"factor {entry.factor}"
        )
        if entry.vanishing:
            line += " (vanishing: mtilde = -1 mod r)"
        lines.append(line)
    lines.append(f"base {closed.base}")
    return _outcome("descent", lines, closed.to_dict())


def cmd_degree(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    degree = virtual_degree(TypeTuple(tuple(args.m), args.r, args.genus))
    line = f"D = {format_rational(degree)}"
    if degree.denominator != 1:
        line += " (non-integral)"
    data = {
        "r": args.r,
        "genus": args.genus,
        "m": list(args.m),
        "degree": format_rational(degree),
        "integral": degree.denominator == 1,
    }
    return _outcome("degree", [line], data)


def cmd_potential_check(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    order = args.order if args.order is not None else config.truncation_order
    if args.formal:
        table = CorrelatorTable(args.r, FORMAL)
    else:
        table = FilesystemTableSource(Path(args.table)).load()
        if table.r != args.r:
            raise UsageError(f"--r {args.r} does not match the table's r={table.r}")
    max_genus = args.max_genus if args.max_genus is not None else config.max_genus
    table = table.freeze()
    reports = [
        verify_change_of_variables(table, order, max_genus),
        verify_small_phase_space(table, order, max_genus),
    ]
    passed = all(report.passed for report in reports)
    lines = ["PASS" if passed else "FAIL"]
    for report in reports:
        lines.extend(report.lines())
    data = {
        "r": args.r,
        "order": order,
        "mode": table.mode,
        "passed": passed,
        "reports": [report.to_dict() for report in reports],
    }
    return _outcome("potential-check", lines, data, EXIT_OK if passed else EXIT_FAILED)


def cmd_seed_table(args: argparse.Namespace, config: EngineConfig) -> CommandOutcome:
    max_points = args.max_points if args.max_points is not None else config.seed_max_points
    table = seed_genus0_wk(CorrelatorTable(args.r, NUMERIC), max_points)
    FilesystemTableSource(Path(args.out)).dump(table)
    data = {"r": args.r, "max_points": max_points, "entries": len(table), "path": str(args.out)}
    return _outcome("seed-table", [f"wrote {len(table)} entries to {args.out}"], data)


Command = Callable[[argparse.Namespace, EngineConfig], CommandOutcome]

COMMANDS: Dict[str, Command] = {
    "root": cmd_root,
    "flow": cmd_flow,
    "check-flows": cmd_check_flows,
    "descent": cmd_descent,
    "degree": cmd_degree,
    "potential-check": cmd_potential_check,
    "seed-table": cmd_seed_table,
}
