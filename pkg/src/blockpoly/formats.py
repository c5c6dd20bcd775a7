"""Matrix files (Matrix Market, CSV) and DOT export of digraphs."""

import io
import logging
from pathlib import Path
from typing import Any, List, Optional, Union

import numpy as np
import numpy.typing as npt
import scipy.io

from blockpoly.blocks import BlockDecomposition, decompose
from blockpoly.constants import (
    BLOCK_COLORS,
    CUT_VERTEX_COLOR,
    FORMAT_CSV,
    FORMAT_MATRIX_MARKET,
    FORMAT_SUFFIXES,
)
from blockpoly.digraph import WeightedDigraph, is_integral
from blockpoly.errors import ConfigError, DimensionError, MatrixFormatError
from blockpoly.lexer import parse_rows
from blockpoly.types import MatrixLike

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

MATRIX_MARKET_BANNER = "%%MatrixMarket"


def _square(rows: List[List[Any]], line_of_row: Optional[List[int]] = None) -> npt.NDArray[Any]:
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            where = f"Line {line_of_row[i]}: " if line_of_row else ""
            raise DimensionError(f"{where}row has {len(row)} entries, expected {n}")
    matrix = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = value
    return matrix


def read_csv_matrix(text: str) -> npt.NDArray[Any]:
    """Parse comma- or whitespace-separated rows into a square object array.

    Raises:
        MatrixFormatError: unreadable token, stray comma or empty input
        DimensionError: rows of unequal length or a non-square matrix
    """
    rows = parse_rows(text)
    if not rows:
        raise MatrixFormatError("Empty matrix file")
    return _square(
        [[token.number for token in row] for row in rows],
        [row[0].line for row in rows],
    )


def _to_exact(array: npt.NDArray[Any]) -> npt.NDArray[Any]:
    """Object array of Python ints when every entry is integral, else unchanged."""
    if np.iscomplexobj(array) or array.dtype.kind == "f":
        if not all(is_integral(x) for x in array.flat):
            return array
    result = np.empty(array.shape, dtype=object)
    for index, value in np.ndenumerate(array):
        result[index] = int(complex(value).real)
    return result


def read_matrix_market(path: PathLike) -> npt.NDArray[Any]:
    """Read a Matrix Market file (coordinate or array) into a dense square matrix.

    Integral matrices come back as object arrays of Python ints.
    """
    path = Path(path)
    text = path.read_text()
    if not text.strip():
        raise MatrixFormatError("Empty matrix file", path=str(path))
    if not text.startswith(MATRIX_MARKET_BANNER):
        raise MatrixFormatError(f"Missing {MATRIX_MARKET_BANNER} banner", path=str(path))

    # Token-level check first, so bad input reports a line and column
    parse_rows(text)

    try:
        rows, cols, entries, layout, field, symmetry = scipy.io.mminfo(str(path))
        loaded = scipy.io.mmread(str(path))
    except (ValueError, IndexError) as e:
        raise MatrixFormatError(f"Invalid Matrix Market data: {e}", path=str(path)) from e

    logger.debug(f"{path}: {rows}x{cols} {layout} {field} {symmetry}, {entries} entries")
    if rows != cols:
        raise DimensionError(f"Matrix must be square, got {rows}x{cols}")
    dense = loaded.toarray() if hasattr(loaded, "toarray") else np.asarray(loaded)
    return _to_exact(dense)


def write_matrix_market(path: PathLike, matrix: MatrixLike) -> None:
    """Write a dense Matrix Market file, integer field for integral matrices."""
    array = np.asarray(matrix, dtype=object)
    if all(is_integral(x) for x in array.flat):
        dense = np.array([[int(complex(x).real) for x in row] for row in array], dtype=np.int64)
    elif all(complex(x).imag == 0 for x in array.flat):
        dense = np.asarray(array, dtype=float)
    else:
        dense = np.asarray(array, dtype=complex)
    scipy.io.mmwrite(str(path), dense)


def _format_entry(value: Any) -> str:
    if is_integral(value):
        return str(int(complex(value).real))
    z = complex(value)
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{z.imag:+}j"


def write_csv_matrix(matrix: MatrixLike) -> str:
    """Render a matrix as comma-separated rows readable by read_csv_matrix."""
    out = io.StringIO()
    for row in np.asarray(matrix, dtype=object):
        out.write(", ".join(_format_entry(x) for x in row))
        out.write("\n")
    return out.getvalue()


def detect_format(path: PathLike) -> str:
    suffix = Path(path).suffix.lower()
    if suffix not in FORMAT_SUFFIXES:
        raise ConfigError(
            f"Cannot infer the format of {path}; use one of {sorted(FORMAT_SUFFIXES)} "
            f"or pass the format explicitly"
        )
    return FORMAT_SUFFIXES[suffix]


def read_matrix(path: PathLike, fmt: Optional[str] = None) -> npt.NDArray[Any]:
    """Read a matrix file as "mm" or "csv"; the suffix decides when fmt is None."""
    fmt = fmt or detect_format(path)
    if fmt == FORMAT_MATRIX_MARKET:
        return read_matrix_market(path)
    if fmt == FORMAT_CSV:
        try:
            return read_csv_matrix(Path(path).read_text())
        except MatrixFormatError as e:
            e.path = str(path)
            raise
    raise ConfigError(f"Unknown matrix format {fmt!r}")


def digraph_to_dot(
    graph: WeightedDigraph,
    decomposition: Optional[BlockDecomposition] = None,
    color_blocks: bool = False,
) -> str:
    """DOT text for G: loops as node labels, cut-vertices in red.

    With color_blocks, every edge takes the color of the block holding both
    endpoints.
    """
    decomposition = decomposition or decompose(graph)
    cut_set = set(decomposition.cut_vertices)

    lines = ["digraph G {"]
    for v in graph.vertices:
        label = f"v{v}"
        loop = graph.loop(v)
        if loop != 0:
            label += f"\\n{_format_entry(loop)}"
        attrs = [f'label="{label}"']
        if v in cut_set:
            attrs.append(f"color={CUT_VERTEX_COLOR}")
            attrs.append(f"fontcolor={CUT_VERTEX_COLOR}")
        lines.append(f"  {v} [{', '.join(attrs)}];")

    for (u, v), weight in sorted(graph.edges.items()):
        if u == v:
            continue
        attrs = [f'label="{_format_entry(weight)}"']
        if color_blocks:
            for index, block in enumerate(decomposition.blocks):
                if u in block and v in block:
                    attrs.append(f"color={BLOCK_COLORS[index % len(BLOCK_COLORS)]}")
                    break
        lines.append(f"  {u} -> {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
