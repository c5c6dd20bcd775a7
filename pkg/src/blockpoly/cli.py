"""Command-line interface for blockpoly."""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from blockpoly.bench import BENCH_KINDS, BenchConfig
from blockpoly.constants import (
    COEFFICIENT_MODES,
    DEFAULT_WORKERS,
    ENGINE_THEOREM,
    FORMAT_CSV,
    FORMAT_MATRIX_MARKET,
    MODE_INT,
    PIVOT_RULES,
    SCALAR_ENGINES,
    THREADS_ENV_VAR,
)
from blockpoly.errors import ConfigError
from blockpoly.report import RunReport
from blockpoly.runner import (
    COMMAND_BENCH,
    COMMAND_BLOCKS,
    COMMAND_BPARTITIONS,
    COMMAND_SCHUR_DET,
    COMMAND_SINGULAR_CHECK,
    COMMAND_VERIFY,
    COMMANDS,
    BlockPolyRunner,
    RunConfig,
)


def resolve_workers(flag: Optional[int]) -> int:
    """--threads, then BLOCKPOLY_THREADS, then the default."""
    if flag is not None:
        return flag
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None or not value.strip():
        return DEFAULT_WORKERS
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="Matrix file (.mtx/.mm Matrix Market, .csv/.txt)")
    common.add_argument("--format", choices=[FORMAT_MATRIX_MARKET, FORMAT_CSV], dest="fmt")
    common.add_argument("--mode", choices=COEFFICIENT_MODES, help="Coefficient mode")
    common.add_argument(
        "--engine", default=ENGINE_THEOREM, choices=SCALAR_ENGINES, help="Engine (default: theorem)"
    )
    common.add_argument("--json", action="store_true", help="Print the JSON report")
    common.add_argument("--output", "-o", help="Write the JSON report (CSV for bench) here")
    common.add_argument("--threads", type=int, help=f"Worker threads (env: {THREADS_ENV_VAR})")
    common.add_argument("--seed", type=int, default=0, help="Generator seed (default: 0)")
    common.add_argument("-v", "--verbose", action="store_true", help="Log stages")
    common.add_argument("-q", "--quiet", action="store_true", help="Log errors only")

    parser = argparse.ArgumentParser(
        prog="blockpoly",
        description="Characteristic and permanent polynomials through block decomposition.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    helps = {
        "charpoly": "φ(A) = det(A − λI)",
        "permpoly": "ψ(A) = per(A − λI)",
        "det": "Determinant",
        "per": "Permanent",
        COMMAND_BLOCKS: "Blocks, cut-vertices and cut-indices",
        COMMAND_BPARTITIONS: "B-partitions",
        COMMAND_SINGULAR_CHECK: "Sufficient singularity conditions of a simple graph",
        COMMAND_SCHUR_DET: "Determinant by Schur elimination",
        COMMAND_VERIFY: "Check all engines against the oracles",
        COMMAND_BENCH: "Time the engines on generated digraphs (CSV)",
    }
    sub: Dict[str, argparse.ArgumentParser] = {}
    for command in COMMANDS:
        sub[command] = subparsers.add_parser(command, parents=[common], help=helps[command])

    sub["det"].add_argument("--explain", action="store_true", help="Include k-tuples or steps")
    sub[COMMAND_BLOCKS].add_argument("--dot", action="store_true", help="Emit DOT text")
    sub[COMMAND_BPARTITIONS].add_argument(
        "--count-only", action="store_true", help="Print ∏ d_i without enumerating"
    )
    sub[COMMAND_SCHUR_DET].add_argument("--pivot", choices=PIVOT_RULES, help="Pivot rule")
    sub[COMMAND_SCHUR_DET].add_argument(
        "--trace", action="store_true", help="Include every elimination step"
    )
    bench = sub[COMMAND_BENCH]
    bench.add_argument("--kind", choices=BENCH_KINDS, default="random")
    bench.add_argument("--instances", type=int, default=5)
    bench.add_argument("--blocks", type=int, default=3)
    bench.add_argument("--block-size", type=int, default=3)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    workers = resolve_workers(args.threads)
    bench = None
    if args.command == COMMAND_BENCH:
        bench = BenchConfig(
            kind=args.kind,
            instances=args.instances,
            blocks=args.blocks,
            block_size=args.block_size,
            seed=args.seed,
            workers=workers,
            mode=args.mode or MODE_INT,
        )
    return RunConfig(
        command=args.command,
        input_path=args.input,
        fmt=args.fmt,
        mode=args.mode,
        engine=args.engine,
        output_path=args.output,
        seed=args.seed,
        workers=workers,
        count_only=getattr(args, "count_only", False),
        explain=getattr(args, "explain", False),
        pivot=getattr(args, "pivot", None),
        trace=getattr(args, "trace", False),
        dot=getattr(args, "dot", False),
        bench=bench,
    )


def _format_value(value: Any) -> str:
    if isinstance(value, list) and len(value) == 2:
        return str(complex(value[0], value[1]))
    return str(value)


def render_text(report: RunReport) -> List[str]:
    """Human-readable lines for a successful report."""
    result = report.result
    command = report.command
    if "text" in result:
        return [result["text"]]
    if command in ("det", "per", COMMAND_SCHUR_DET):
        lines = [_format_value(result["value"])]
        for step in result.get("steps", []):
            lines.append(f"  eliminate v{step['pivot']}: {step['case']}")
        return lines
    if command == COMMAND_BLOCKS:
        decomposition = report.decomposition or {}
        lines = [f"B{i}: {block}" for i, block in enumerate(decomposition.get("blocks", []))]
        lines.append(f"cut-vertices: {decomposition.get('cut_vertices', [])}")
        lines.append(f"cut-indices: {decomposition.get('cut_index', {})}")
        if "dot" in result:
            lines.append(result["dot"].rstrip("\n"))
        return lines
    if command == COMMAND_BPARTITIONS:
        lines = [str(result["count"])]
        for partition in result.get("partitions", []):
            parts = ", ".join(str(part) for part in partition["parts"])
            lines.append(f"  {parts}  det-summand: {_format_value(partition['det_summand'])}")
        return lines
    if command == COMMAND_SINGULAR_CHECK:
        conditions = result["conditions"]
        if not conditions:
            return ["no singularity condition holds"]
        return [f"singular: condition(s) {', '.join(str(c) for c in conditions)}"]
    if command == COMMAND_VERIFY:
        lines = []
        for entry in result["reports"]:
            icon = "✓" if entry["verdict"] == "equal" else "❌"
            lines.append(f"{icon} {entry['quantity']} {entry['engine']} vs {entry['oracle']}")
        return lines
    if command == COMMAND_BENCH:
        return [result["csv"].rstrip("\n")]
    return []


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.INFO if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = config_from_args(args)
    except ConfigError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2

    runner = BlockPolyRunner(log_level=logging.getLevelName(level))
    report = runner.run(config)

    if config.output_path:
        path = Path(config.output_path)
        if report.command == COMMAND_BENCH and report.success:
            path.write_text(report.result["csv"])
        else:
            path.write_text(json.dumps(report.to_json(), indent=2))

    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    elif report.success:
        for line in render_text(report):
            print(line)

    for error in report.errors:
        print(str(error), file=sys.stderr)
    for warning in report.warnings:
        print(str(warning), file=sys.stderr)

    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
