"""Brute-force references every engine is checked against.

All characteristic polynomials follow the det(A − λI) convention. The
Leibniz expansions are exact in int mode; Faddeev-LeVerrier runs in floats.
"""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple, TypeVar, Union

import numpy as np
import numpy.typing as npt

from blockpoly.constants import (
    FADDEEV_MAX_ORDER,
    FLOAT_REL_TOL,
    LAPLACE_MAX_ORDER,
    LEIBNIZ_ORACLE_MAX_ORDER,
    MODE_COMPLEX,
    MODE_INT,
)
from blockpoly.digraph import coerce_weight, infer_mode
from blockpoly.errors import DimensionError, DomainError, SizeError
from blockpoly.polynomial import Polynomial
from blockpoly.types import Coefficient, CoefficientMode, MatrixLike

T = TypeVar("T")

# Sparse row form: for each row, the (column, entry) pairs with nonzero entry
SparseRows = Sequence[Sequence[Tuple[int, Any]]]


def leibniz_expand(rows: SparseRows, permanent: bool, one: T, zero: T) -> T:
    """Σ_σ sgn(σ) ∏ a_{i,σ(i)} over permutations touching only listed entries.

    Works for any ring elements supporting +, * and unary minus. The sign is
    tracked incrementally: placing row i in column j adds one inversion per
    earlier row already sitting in a larger column.
    """
    n = len(rows)
    if n == 0:
        return one
    used = [False] * n
    total = zero

    def visit(i: int, product: T, inversions: int) -> None:
        nonlocal total
        if i == n:
            if permanent or inversions % 2 == 0:
                total = total + product
            else:
                total = total - product
            return
        for j, entry in rows[i]:
            if used[j]:
                continue
            added = sum(used[j + 1 :])
            used[j] = True
            visit(i + 1, product * entry, inversions + added)
            used[j] = False

    visit(0, one, 0)
    return total


def as_square_array(matrix: MatrixLike) -> Tuple[npt.NDArray[Any], int]:
    array = matrix if isinstance(matrix, np.ndarray) else np.asarray(matrix, dtype=object)
    if array.shape in ((0,), (0, 0)):
        return np.zeros((0, 0), dtype=object), 0
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionError(f"Matrix must be square, got shape {array.shape}")
    return array, array.shape[0]


def _entries(array: npt.NDArray[Any], n: int) -> Tuple[List[List[Coefficient]], CoefficientMode]:
    raw = [[array[i, j] for j in range(n)] for i in range(n)]
    mode = infer_mode(x for row in raw for x in row)
    return [[coerce_weight(x, mode) for x in row] for row in raw], mode


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeError(f"{what} is capped at order {cap}, got order {n}")


def _polynomial_expansion(matrix: MatrixLike, permanent: bool) -> Polynomial:
    array, n = as_square_array(matrix)
    _check_cap(n, LEIBNIZ_ORACLE_MAX_ORDER, "Leibniz expansion")
    entries, mode = _entries(array, n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append((j, Polynomial.linear(entries[i][j], -1, mode)))
            elif entries[i][j] != 0:
                row.append((j, Polynomial.constant(entries[i][j], mode)))
        rows.append(row)
    return leibniz_expand(rows, permanent, Polynomial.one(mode), Polynomial.zero(mode))


def _scalar_expansion(matrix: MatrixLike, permanent: bool) -> Coefficient:
    array, n = as_square_array(matrix)
    _check_cap(n, LEIBNIZ_ORACLE_MAX_ORDER, "Leibniz expansion")
    entries, mode = _entries(array, n)
    rows = [[(j, x) for j, x in enumerate(row) if x != 0] for row in entries]
    one: Coefficient = 1 if mode == MODE_INT else 1 + 0j
    zero: Coefficient = 0 if mode == MODE_INT else 0j
    return leibniz_expand(rows, permanent, one, zero)


def leibniz_charpoly(matrix: MatrixLike) -> Polynomial:
    """det(A − λI) summed over all n! permutations."""
    return _polynomial_expansion(matrix, permanent=False)


def leibniz_permpoly(matrix: MatrixLike) -> Polynomial:
    """per(A − λI) summed over all n! permutations."""
    return _polynomial_expansion(matrix, permanent=True)


def leibniz_det(matrix: MatrixLike) -> Coefficient:
    return _scalar_expansion(matrix, permanent=False)


def leibniz_per(matrix: MatrixLike) -> Coefficient:
    return _scalar_expansion(matrix, permanent=True)


def laplace_expand(matrix: MatrixLike, rows: Sequence[int]) -> Tuple[Coefficient, Coefficient]:
    """Generalized Laplace expansion along the row subset ``rows`` (0-based).

    det(A) = Σ_T (−1)^{ΣS+ΣT} det(A[S,T]) det(A[S̄,T̄]) over k-subsets T of
    columns; the permanent is the same sum without signs.
    """
    array, n = as_square_array(matrix)
    _check_cap(n, LAPLACE_MAX_ORDER, "Laplace expansion")
    chosen = sorted(set(rows))
    if len(chosen) != len(rows) or any(r < 0 or r >= n for r in chosen):
        raise DomainError(f"Row subset {list(rows)} is not a subset of 0..{n - 1}")
    k = len(chosen)
    if not 0 < k < n:
        raise DomainError(f"Row subset size must lie strictly between 0 and {n}, got {k}")

    entries, _ = _entries(array, n)
    full = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            full[i, j] = entries[i][j]
    complement = [r for r in range(n) if r not in chosen]

    det_total: Coefficient = 0
    per_total: Coefficient = 0
    for cols in itertools.combinations(range(n), k):
        other_cols = [c for c in range(n) if c not in cols]
        inner = full[np.ix_(chosen, cols)]
        outer = full[np.ix_(complement, other_cols)]
        sign = -1 if (sum(chosen) + sum(cols)) % 2 else 1
        det_total += sign * leibniz_det(inner) * leibniz_det(outer)
        per_total += leibniz_per(inner) * leibniz_per(outer)
    return det_total, per_total


def faddeev_leverrier(matrix: MatrixLike) -> Polynomial:
    """Characteristic polynomial by the Faddeev-LeVerrier recursion, float mode.

    The recursion yields det(λI − A); the result is multiplied by (−1)^n to
    return det(A − λI).
    """
    array, n = as_square_array(matrix)
    _check_cap(n, FADDEEV_MAX_ORDER, "Faddeev-LeVerrier")
    if n == 0:
        return Polynomial.one(MODE_COMPLEX)
    a = np.asarray(array, dtype=complex)
    identity = np.eye(n, dtype=complex)

    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = 1.0
    m = np.zeros((n, n), dtype=complex)
    for k in range(1, n + 1):
        m = a @ m + coeffs[n - k + 1] * identity
        coeffs[n - k] = -np.trace(a @ m) / k

    sign = -1.0 if n % 2 else 1.0
    return Polynomial(tuple(sign * c for c in coeffs), MODE_COMPLEX)


OracleValue = Union[Polynomial, int, complex]


def compare_values(
    engine_value: OracleValue, oracle_value: OracleValue, rel_tol: float = FLOAT_REL_TOL
) -> Tuple[bool, float]:
    """(equal, deviation): exact comparison for ints, relative tolerance otherwise."""
    if isinstance(engine_value, Polynomial) and isinstance(oracle_value, Polynomial):
        if engine_value.mode == MODE_INT and oracle_value.mode == MODE_INT:
            equal = engine_value.coeffs == oracle_value.coeffs
            return equal, 0.0 if equal else engine_value.deviation(oracle_value)
        deviation = engine_value.deviation(oracle_value)
        return deviation <= rel_tol, deviation
    if isinstance(engine_value, Polynomial) or isinstance(oracle_value, Polynomial):
        raise DomainError("Cannot compare a polynomial with a scalar")
    if isinstance(engine_value, int) and isinstance(oracle_value, int):
        diff = abs(engine_value - oracle_value)
        return diff == 0, float(diff) / max(1, abs(engine_value), abs(oracle_value))
    a, b = complex(engine_value), complex(oracle_value)
    deviation = abs(a - b) / max(1.0, abs(a), abs(b))
    return deviation <= rel_tol, deviation


def value_json(value: OracleValue) -> Any:
    if isinstance(value, Polynomial):
        return value.to_json()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


@dataclass
class OracleReport:
    """Verdict of one engine value checked against one oracle value."""

    subject: str
    quantity: str  # charpoly | permpoly | det | per
    engine: str
    oracle: str
    engine_value: OracleValue
    oracle_value: OracleValue
    equal: bool
    deviation: float = 0.0

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "mismatch"

    def __str__(self) -> str:
        icon = "✓" if self.equal else "❌"
        detail = "" if self.equal else f" (max deviation {self.deviation:.3g})"
        return f"{icon} {self.subject}: {self.quantity} {self.engine} vs {self.oracle}{detail}"

    def to_json(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "quantity": self.quantity,
            "engine": self.engine,
            "oracle": self.oracle,
            "engine_value": value_json(self.engine_value),
            "oracle_value": value_json(self.oracle_value),
            "verdict": self.verdict,
            "deviation": self.deviation,
        }
