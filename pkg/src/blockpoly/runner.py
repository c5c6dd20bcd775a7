"""Command runner - reading, decomposition and dispatch of one blockpoly command."""

import logging
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, List, Optional, Tuple

from blockpoly.bench import BenchConfig, bench_csv, run_bench
from blockpoly.block_graph import explain_block_graph
from blockpoly.blocks import BlockDecomposition, decompose
from blockpoly.bpartition import (
    count_bpartitions,
    det_summand,
    enumerate_bpartitions,
    phi_summand,
)
from blockpoly.constants import (
    COEFFICIENT_MODES,
    DEFAULT_WORKERS,
    ENGINE_BLOCKGRAPH,
    ENGINE_SCHUR,
    ENGINE_THEOREM,
    MODE_INT,
    POLYNOMIAL_ENGINES,
    SCALAR_ENGINES,
)
from blockpoly.determinant import determinant, permanent
from blockpoly.digraph import WeightedDigraph, digraph_of_matrix
from blockpoly.engines import EngineContext, get_engine, theorem_terms
from blockpoly.errors import BlockPolyError, ConfigError, MatrixFormatError
from blockpoly.formats import digraph_to_dot, read_matrix
from blockpoly.oracles import value_json
from blockpoly.report import RunError, RunReport
from blockpoly.schur import default_pivot_rule, degree_heuristic_report, schur_trace
from blockpoly.singular import singularity_conditions
from blockpoly.types import MatrixLike
from blockpoly.verify import verify

COMMAND_CHARPOLY = "charpoly"
COMMAND_PERMPOLY = "permpoly"
COMMAND_DET = "det"
COMMAND_PER = "per"
COMMAND_BLOCKS = "blocks"
COMMAND_BPARTITIONS = "bpartitions"
COMMAND_SINGULAR_CHECK = "singular-check"
COMMAND_SCHUR_DET = "schur-det"
COMMAND_VERIFY = "verify"
COMMAND_BENCH = "bench"

COMMANDS: List[str] = [
    COMMAND_CHARPOLY,
    COMMAND_PERMPOLY,
    COMMAND_DET,
    COMMAND_PER,
    COMMAND_BLOCKS,
    COMMAND_BPARTITIONS,
    COMMAND_SINGULAR_CHECK,
    COMMAND_SCHUR_DET,
    COMMAND_VERIFY,
    COMMAND_BENCH,
]


@dataclass
class RunConfig:
    """Everything one command needs; either input_path or matrix supplies the input."""

    command: str
    input_path: Optional[str] = None
    matrix: Optional[MatrixLike] = None
    fmt: Optional[str] = None
    mode: Optional[str] = None
    engine: str = ENGINE_THEOREM
    output_path: Optional[str] = None
    seed: int = 0
    workers: int = DEFAULT_WORKERS

    # Command options
    count_only: bool = False
    explain: bool = False
    pivot: Optional[str] = None
    trace: bool = False
    dot: bool = False
    bench: Optional[BenchConfig] = None


class BlockPolyRunner:
    """Runs blockpoly commands and collects their results in a RunReport."""

    def __init__(self, log_level: str = "WARNING"):
        """Initialize runner."""
        self.logger = logging.getLogger(__name__)
        self.logger.setLevel(log_level)

    def run(self, config: RunConfig) -> RunReport:
        """Execute one command and return its report; errors are recorded, not raised."""
        subject = Path(config.input_path).name if config.input_path else "input"
        report = RunReport(command=config.command, subject=subject, engine=config.engine)

        try:
            self._check_config(config)

            if config.command == COMMAND_BENCH:
                self.logger.info("Stage 1: Benchmark...")
                self._bench(config, report)
                report.success = True
                return report

            # Stage 1: Input
            self.logger.info("Stage 1: Reading matrix...")
            start = time.perf_counter()
            graph = self._read(config, report)
            report.timing["read"] = time.perf_counter() - start
            report.order = graph.order
            report.mode = graph.mode
            self.logger.debug(f"Read order-{graph.order} {graph.mode} digraph")

            # Stage 2: Structure
            self.logger.info("Stage 2: Block decomposition...")
            start = time.perf_counter()
            decomposition = decompose(graph)
            report.decomposition = decomposition.to_json()
            report.bpartition_count = count_bpartitions(decomposition)
            report.timing["decompose"] = time.perf_counter() - start
            self.logger.debug(
                f"{decomposition.block_count} block(s), "
                f"{report.bpartition_count} B-partition(s)"
            )

            # Stage 3: Command
            self.logger.info(f"Stage 3: {config.command}...")
            start = time.perf_counter()
            self._dispatch(config, graph, decomposition, report)
            report.timing["command"] = time.perf_counter() - start

            report.success = True
            if report.mismatches:
                self.logger.error(f"{report.mismatches} oracle mismatch(es)")
            else:
                self.logger.info(f"✓ {config.command} finished on {subject}")

        except MatrixFormatError as e:
            report.success = False
            report.errors.append(RunError(line=e.line, column=e.column, message=e.message))
            self.logger.error(f"Format error: {e}")

        except BlockPolyError as e:
            report.success = False
            report.errors.append(RunError(message=str(e)))
            self.logger.error(f"{type(e).__name__}: {e}")

        except OSError as e:
            report.success = False
            report.errors.append(RunError(message=f"Error reading file: {e}"))
            self.logger.error(f"I/O error: {e}")

        except Exception as e:
            report.success = False
            report.errors.append(RunError(message=f"Internal error: {e}"))
            self.logger.exception("Unexpected error during run")

        return report

    def _check_config(self, config: RunConfig) -> None:
        if config.command not in COMMANDS:
            raise ConfigError(f"Unknown command {config.command!r}")
        if config.mode is not None and config.mode not in COEFFICIENT_MODES:
            raise ConfigError(
                f"Unsupported mode {config.mode!r}; choose one of {COEFFICIENT_MODES}"
            )
        polynomial_command = config.command in (COMMAND_CHARPOLY, COMMAND_PERMPOLY, COMMAND_PER)
        allowed = POLYNOMIAL_ENGINES if polynomial_command else SCALAR_ENGINES
        if config.engine not in allowed:
            raise ConfigError(
                f"Engine {config.engine!r} is not available for {config.command}; "
                f"choose one of {allowed}"
            )
        if config.workers < 1:
            raise ConfigError(f"Thread count must be positive, got {config.workers}")

    def _read(self, config: RunConfig, report: RunReport) -> WeightedDigraph:
        if config.matrix is not None:
            matrix = config.matrix
        elif config.input_path is not None:
            report.source_file_path = str(Path(config.input_path).resolve())
            matrix = read_matrix(config.input_path, config.fmt)
        else:
            raise ConfigError("No input: give a matrix file or an in-memory matrix")
        return digraph_of_matrix(matrix, mode=config.mode)  # type: ignore[arg-type]

    def _dispatch(
        self,
        config: RunConfig,
        graph: WeightedDigraph,
        decomposition: BlockDecomposition,
        report: RunReport,
    ) -> None:
        command = config.command
        result = report.result

        if command in (COMMAND_CHARPOLY, COMMAND_PERMPOLY):
            permanent_poly = command == COMMAND_PERMPOLY
            context = EngineContext(permanent=permanent_poly, workers=config.workers)
            polynomial = get_engine(config.engine).polynomial(graph, context)
            result["polynomial"] = polynomial.to_json()
            result["text"] = str(polynomial)
            if config.engine == ENGINE_THEOREM:
                terms = theorem_terms(graph, permanent=permanent_poly)
                result["terms"] = [t.to_json() for t in terms]

        elif command == COMMAND_DET:
            result["value"] = value_json(determinant(graph, config.engine, config.workers))
            if config.explain and config.engine == ENGINE_BLOCKGRAPH:
                result["explain"] = explain_block_graph(graph)
            elif config.explain and config.engine == ENGINE_SCHUR:
                _, steps = schur_trace(graph, config.pivot)
                result["explain"] = {"steps": [s.to_json() for s in steps]}

        elif command == COMMAND_PER:
            result["value"] = value_json(permanent(graph, config.engine, config.workers))

        elif command == COMMAND_BLOCKS:
            if config.dot:
                result["dot"] = digraph_to_dot(graph, decomposition, color_blocks=True)

        elif command == COMMAND_BPARTITIONS:
            result["count"] = report.bpartition_count
            if not config.count_only:
                result["partitions"] = [
                    {
                        **p.to_json(),
                        "phi_summand": phi_summand(p, graph).to_json(),
                        "det_summand": value_json(det_summand(p, graph)),
                    }
                    for p in enumerate_bpartitions(graph, decomposition)
                ]

        elif command == COMMAND_SINGULAR_CHECK:
            conditions = singularity_conditions(graph)
            result["conditions"] = conditions
            result["singular_implied"] = bool(conditions)
            result["determinant"] = value_json(determinant(graph))

        elif command == COMMAND_SCHUR_DET:
            value, steps = schur_trace(graph, config.pivot)
            result["value"] = value_json(value)
            result["pivot"] = config.pivot or default_pivot_rule(graph.order)
            if config.trace:
                result["steps"] = [s.to_json() for s in steps]
            if graph.order >= 2:
                result["heuristic"] = degree_heuristic_report(graph).to_json()

        elif command == COMMAND_VERIFY:
            reports = verify(graph, subject=report.subject, workers=config.workers)
            result["reports"] = [r.to_json() for r in reports]
            report.mismatches = sum(1 for r in reports if not r.equal)
            for r in reports:
                if not r.equal:
                    report.warnings.append(RunError(message=str(r), severity="warning"))

    def _bench(self, config: RunConfig, report: RunReport) -> None:
        bench = config.bench or BenchConfig(
            seed=config.seed, workers=config.workers, mode=config.mode or MODE_INT
        )
        start = time.perf_counter()
        rows = run_bench(bench)
        report.timing["bench"] = time.perf_counter() - start
        report.result["rows"] = [asdict(row) for row in rows]
        report.result["csv"] = bench_csv(rows)
        report.mismatches = sum(1 for row in rows if row.status == "mismatch")


def run_matrix(
    matrix: MatrixLike, command: str, verbose: bool = False, **options: Any
) -> RunReport:
    """Run a command on an in-memory matrix, convenience function."""
    log_level = "INFO" if verbose else "WARNING"
    runner = BlockPolyRunner(log_level=log_level)
    return runner.run(RunConfig(command=command, matrix=matrix, **options))


def run_file(path: str, command: str, verbose: bool = False, **options: Any) -> RunReport:
    """Run a command on a matrix file, convenience function."""
    log_level = "INFO" if verbose else "WARNING"
    runner = BlockPolyRunner(log_level=log_level)
    return runner.run(RunConfig(command=command, input_path=path, **options))


def verify_matrix(matrix: MatrixLike, mode: Optional[str] = None) -> Tuple[bool, List[str]]:
    """Check every engine against the oracles without keeping the values.

    Args:
        matrix: Square matrix to check
        mode: "int" or "complex"; inferred from the entries when omitted

    Returns:
        Tuple of (all_equal, messages)
        - all_equal: True if the run succeeded and no engine disagreed with an oracle
        - messages: Errors and mismatch reports (empty when everything agrees)

    Example:
        >>> ok, messages = verify_matrix([[0, 1], [1, 0]])
        >>> if not ok:
        ...     for message in messages:
        ...         print(message)

    """
    runner = BlockPolyRunner(log_level="ERROR")
    report = runner.run(RunConfig(command=COMMAND_VERIFY, matrix=matrix, mode=mode))

    messages: List[str] = []
    for error in report.errors:
        messages.append(str(error))
    for warning in report.warnings:
        messages.append(str(warning))

    return report.exit_status == 0, messages
