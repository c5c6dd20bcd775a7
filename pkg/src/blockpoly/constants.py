"""Constants and default values for blockpoly."""

from typing import Dict, List

# Coefficient modes
MODE_INT = "int"
MODE_COMPLEX = "complex"
COEFFICIENT_MODES: List[str] = [MODE_INT, MODE_COMPLEX]

# Float-mode tolerances
FLOAT_REL_TOL = 1e-9  # relative, default comparison tolerance
POLY_TRIM_RTOL = 1e-12  # trailing |c_i| <= rtol * max|c_j| is dropped
SCHUR_SINGULAR_RTOL = 1e-9  # |det(A1)| <= rtol * (max row norm)^(n-1) means singular
SCHUR_VERIFY_RTOL = 1e-6

# Expansion limits
LEIBNIZ_BASE_MAX_ORDER = 7  # parts up to this order are expanded term by term
LEIBNIZ_ORACLE_MAX_ORDER = 10
LAPLACE_MAX_ORDER = 8
FADDEEV_MAX_ORDER = 30

# Block-graph k-tuples: subset feasibility checked explicitly up to this many blocks
KTUPLE_SUBSET_MAX_BLOCKS = 15

# Elimination pivot rules
SCHUR_EXHAUSTIVE_MAX_ORDER = 12
PIVOT_EXHAUSTIVE = "exhaustive"
PIVOT_MAX_DEGREE = "max-degree"
PIVOT_RULES: List[str] = [PIVOT_EXHAUSTIVE, PIVOT_MAX_DEGREE]

# Elimination case tags
CASE_A1_INVERTIBLE = "A1-invertible"
CASE_A1_SINGULAR_D_NONZERO = "A1-singular-d-nonzero"
CASE_A1_SINGULAR_D_ZERO = "A1-singular-d-zero"

# Engines
ENGINE_THEOREM = "theorem"
ENGINE_RECURSIVE = "recursive"
ENGINE_ORACLE = "oracle"
ENGINE_BLOCKGRAPH = "blockgraph"
ENGINE_SCHUR = "schur"
POLYNOMIAL_ENGINES: List[str] = [ENGINE_THEOREM, ENGINE_RECURSIVE, ENGINE_ORACLE]
SCALAR_ENGINES: List[str] = POLYNOMIAL_ENGINES + [ENGINE_BLOCKGRAPH, ENGINE_SCHUR]

# Matrix file formats, keyed by file suffix
FORMAT_MATRIX_MARKET = "mm"
FORMAT_CSV = "csv"
FORMAT_SUFFIXES: Dict[str, str] = {
    ".mtx": FORMAT_MATRIX_MARKET,
    ".mm": FORMAT_MATRIX_MARKET,
    ".csv": FORMAT_CSV,
    ".txt": FORMAT_CSV,
}

# Parallelism
THREADS_ENV_VAR = "BLOCKPOLY_THREADS"
DEFAULT_WORKERS = 1

# DOT export
CUT_VERTEX_COLOR = "red"
BLOCK_COLORS: List[str] = [
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "cyan4",
    "magenta",
    "gold3",
]

# Display symbol for the polynomial variable
LAMBDA_SYMBOL = "λ"
