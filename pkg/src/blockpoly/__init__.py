"""blockpoly: characteristic and permanent polynomials through block decomposition."""

from blockpoly.block_graph import KTuple, det_block_graph, feasible_ktuples, is_block_graph
from blockpoly.blocks import BlockDecomposition, block_count, decompose, pendant_blocks
from blockpoly.bpartition import BPartition, count_bpartitions, enumerate_bpartitions
from blockpoly.determinant import determinant, determinant_fast_path, permanent
from blockpoly.digraph import WeightedDigraph, digraph_of_matrix, matrix_of_digraph
from blockpoly.engines import (
    EngineContext,
    PolynomialEngine,
    charpoly_recursive,
    charpoly_single_cut,
    charpoly_theorem,
    get_engine,
    permpoly_recursive,
    permpoly_theorem,
)
from blockpoly.errors import (
    BlockPolyError,
    ConfigError,
    DimensionError,
    DomainError,
    MatrixFormatError,
    ModeError,
    SizeError,
)
from blockpoly.polynomial import Polynomial, poly_add, poly_mul, poly_scale
from blockpoly.report import RunError, RunReport
from blockpoly.runner import BlockPolyRunner, RunConfig, run_file, run_matrix, verify_matrix
from blockpoly.schur import best_elimination_vertex, det_schur, schur_trace
from blockpoly.singular import singularity_conditions
from blockpoly.verify import verify

__version__ = "0.1.0"

__all__ = [
    # Runner
    "BlockPolyRunner",
    "RunConfig",
    "run_matrix",
    "run_file",
    "verify_matrix",
    # Result types
    "RunReport",
    "RunError",
    # Digraphs and structure
    "WeightedDigraph",
    "digraph_of_matrix",
    "matrix_of_digraph",
    "BlockDecomposition",
    "decompose",
    "pendant_blocks",
    "block_count",
    "BPartition",
    "enumerate_bpartitions",
    "count_bpartitions",
    # Polynomials and engines
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "EngineContext",
    "PolynomialEngine",
    "get_engine",
    "charpoly_theorem",
    "permpoly_theorem",
    "charpoly_recursive",
    "permpoly_recursive",
    "charpoly_single_cut",
    # Scalars
    "determinant",
    "permanent",
    "determinant_fast_path",
    "KTuple",
    "is_block_graph",
    "feasible_ktuples",
    "det_block_graph",
    "det_schur",
    "schur_trace",
    "best_elimination_vertex",
    "singularity_conditions",
    "verify",
    # Errors
    "BlockPolyError",
    "ConfigError",
    "DimensionError",
    "DomainError",
    "MatrixFormatError",
    "ModeError",
    "SizeError",
]
