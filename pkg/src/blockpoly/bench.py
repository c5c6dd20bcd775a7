"""Wall-time comparison of the polynomial engines on generated digraphs."""

import csv
import io
import logging
import time
from dataclasses import asdict, dataclass
from typing import List, Optional

import numpy as np

from blockpoly.blocks import decompose
from blockpoly.constants import (
    COEFFICIENT_MODES,
    DEFAULT_WORKERS,
    ENGINE_ORACLE,
    ENGINE_RECURSIVE,
    ENGINE_THEOREM,
    LEIBNIZ_ORACLE_MAX_ORDER,
    MODE_COMPLEX,
    MODE_INT,
)
from blockpoly.digraph import WeightedDigraph, digraph_of_matrix, matrix_of_digraph
from blockpoly.engines import EngineContext, get_engine
from blockpoly.errors import ConfigError
from blockpoly.generators import block_chain, planted_cut_digraph, random_block
from blockpoly.oracles import compare_values
from blockpoly.types import CoefficientMode

logger = logging.getLogger(__name__)

BENCH_KINDS = ["random", "chain"]
BENCH_COLUMNS = ["instance", "order", "blocks", "cut_vertices", "engine", "status", "seconds"]
TIMING_COLUMNS = ["seconds"]


@dataclass
class BenchConfig:
    """Generator parameters for a benchmark run."""

    kind: str = "random"  # random: planted cut-vertices, chain: blocks glued end to end
    instances: int = 5
    blocks: int = 3
    block_size: int = 3
    seed: int = 0
    workers: int = DEFAULT_WORKERS
    mode: CoefficientMode = MODE_INT  # complex: the same instances with float weights


@dataclass
class BenchRow:
    """One engine on one instance; seconds is None when the engine was skipped."""

    instance: int
    order: int
    blocks: int
    cut_vertices: int
    engine: str
    status: str  # ok | mismatch | skipped
    seconds: Optional[float] = None


def bench_instances(config: BenchConfig) -> List[WeightedDigraph]:
    if config.kind not in BENCH_KINDS:
        raise ConfigError(f"Unknown bench kind {config.kind!r}; choose one of {BENCH_KINDS}")
    if config.mode not in COEFFICIENT_MODES:
        raise ConfigError(f"Unknown bench mode {config.mode!r}; choose one of {COEFFICIENT_MODES}")
    rng = np.random.default_rng(config.seed)
    instances = []
    for _ in range(config.instances):
        if config.kind == "chain":
            pieces = [random_block(rng, config.block_size) for _ in range(config.blocks)]
            instances.append(block_chain(pieces))
        else:
            sizes = [int(rng.integers(2, config.block_size + 1)) for _ in range(config.blocks)]
            instances.append(planted_cut_digraph(rng, sizes))
    if config.mode == MODE_COMPLEX:
        instances = [
            digraph_of_matrix(matrix_of_digraph(g).astype(complex), MODE_COMPLEX, g.vertices)
            for g in instances
        ]
    return instances


def run_bench(config: BenchConfig) -> List[BenchRow]:
    """Time theorem, recursive and (up to order 10) oracle engines per instance.

    The recursive and oracle rows are marked "mismatch" when their φ differs
    from the theorem engine's, within the float tolerance in complex mode.
    """
    rows: List[BenchRow] = []
    context = EngineContext(workers=config.workers)
    for index, graph in enumerate(bench_instances(config)):
        decomposition = decompose(graph)
        reference = None
        for engine in (ENGINE_THEOREM, ENGINE_RECURSIVE, ENGINE_ORACLE):
            row = BenchRow(
                instance=index,
                order=graph.order,
                blocks=decomposition.block_count,
                cut_vertices=len(decomposition.cut_vertices),
                engine=engine,
                status="skipped",
            )
            if engine == ENGINE_ORACLE and graph.order > LEIBNIZ_ORACLE_MAX_ORDER:
                rows.append(row)
                continue
            start = time.perf_counter()
            value = get_engine(engine).polynomial(graph, context)
            row.seconds = time.perf_counter() - start
            if reference is None:
                reference = value
            equal, _ = compare_values(value, reference)
            row.status = "ok" if equal else "mismatch"
            rows.append(row)
            logger.debug(f"Instance {index} ({graph.order} vertices): {engine} {row.seconds:.4f}s")
    return rows


def bench_csv(rows: List[BenchRow], timing: bool = True) -> str:
    """CSV table of bench rows; timing=False drops the wall-time columns."""
    columns = [c for c in BENCH_COLUMNS if timing or c not in TIMING_COLUMNS]
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = asdict(row)
        if record["seconds"] is not None:
            record["seconds"] = f"{record['seconds']:.6f}"
        writer.writerow(record)
    return out.getvalue()
