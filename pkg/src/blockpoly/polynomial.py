"""Dense univariate polynomials in λ over exact integers or complex floats.

Characteristic polynomials φ(G) = det(A − λI) and permanent polynomials
ψ(G) = per(A − λI) are values of this type. Coefficients are stored constant
term first; the zero polynomial has no coefficients.
"""

from dataclasses import dataclass
from numbers import Integral
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from blockpoly.constants import FLOAT_REL_TOL, LAMBDA_SYMBOL, MODE_COMPLEX, MODE_INT, POLY_TRIM_RTOL
from blockpoly.errors import DomainError
from blockpoly.types import Coefficient, CoefficientMode


def _coerce(value: Any, mode: CoefficientMode) -> Coefficient:
    if mode == MODE_INT:
        if isinstance(value, Integral):
            return int(value)
        raise DomainError(f"Coefficient {value!r} is not an integer in int mode")
    if mode == MODE_COMPLEX:
        return complex(value)
    raise DomainError(f"Unknown coefficient mode: {mode!r}")


def _normalize(coeffs: Sequence[Any], mode: CoefficientMode) -> Tuple[Coefficient, ...]:
    values = [_coerce(c, mode) for c in coeffs]
    if mode == MODE_INT:
        while values and values[-1] == 0:
            values.pop()
        return tuple(values)

    scale = max((abs(c) for c in values), default=0.0)
    threshold = POLY_TRIM_RTOL * scale
    while values and abs(values[-1]) <= threshold:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial c_0 + c_1 λ + ... + c_d λ^d in a fixed coefficient mode."""

    coeffs: Tuple[Coefficient, ...] = ()
    mode: CoefficientMode = MODE_INT

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _normalize(self.coeffs, self.mode))

    # Constructors

    @classmethod
    def zero(cls, mode: CoefficientMode = MODE_INT) -> "Polynomial":
        return cls((), mode)

    @classmethod
    def one(cls, mode: CoefficientMode = MODE_INT) -> "Polynomial":
        """Unit polynomial; also φ and ψ of the null graph."""
        return cls((1,), mode)

    @classmethod
    def constant(cls, value: Coefficient, mode: CoefficientMode = MODE_INT) -> "Polynomial":
        return cls((value,), mode)

    @classmethod
    def lam(cls, mode: CoefficientMode = MODE_INT) -> "Polynomial":
        """The variable λ."""
        return cls((0, 1), mode)

    @classmethod
    def linear(
        cls, c0: Coefficient, c1: Coefficient, mode: CoefficientMode = MODE_INT
    ) -> "Polynomial":
        """c0 + c1 λ."""
        return cls((c0, c1), mode)

    # Properties

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Coefficient:
        return self.coeffs[-1] if self.coeffs else _coerce(0, self.mode)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Coefficient:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return _coerce(0, self.mode)

    # Ring operations

    def _check_mode(self, other: "Polynomial") -> None:
        if self.mode != other.mode:
            raise DomainError(
                f"Coefficient mode mismatch: {self.mode!r} and {other.mode!r}"
            )

    def __add__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_mode(other)
            size = max(len(self.coeffs), len(other.coeffs))
            return Polynomial(
                tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)),
                self.mode,
            )
        if isinstance(other, (int, complex)) and not isinstance(other, bool):
            return self + Polynomial.constant(other, self.mode)
        return NotImplemented

    def __radd__(self, other: Any) -> "Polynomial":
        # sum() starts from the int 0
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs), self.mode)

    def __sub__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            return self + (-other)
        if isinstance(other, (int, complex)):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_mode(other)
            return Polynomial(_convolve(self.coeffs, other.coeffs, self.mode), self.mode)
        if isinstance(other, (Integral, complex, float)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "Polynomial":
        return self.__mul__(other)

    def scale(self, factor: Any) -> "Polynomial":
        """Multiply every coefficient by a scalar of this polynomial's mode."""
        c = _coerce(factor, self.mode)
        return Polynomial(tuple(c * x for x in self.coeffs), self.mode)

    # Evaluation

    def evaluate(self, x: Coefficient) -> Coefficient:
        """Horner evaluation at λ = x."""
        result: Coefficient = _coerce(0, self.mode)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def eval_at_zero(self) -> Coefficient:
        return self.coefficient(0)

    # Conversions and comparison

    def to_complex(self) -> "Polynomial":
        if self.mode == MODE_COMPLEX:
            return self
        return Polynomial(tuple(complex(c) for c in self.coeffs), MODE_COMPLEX)

    def deviation(self, other: "Polynomial") -> float:
        """Largest coefficient difference relative to the larger coefficient scale."""
        a, b = self.to_complex(), other.to_complex()
        size = max(len(a.coeffs), len(b.coeffs))
        if size == 0:
            return 0.0
        diff = max(abs(a.coefficient(i) - b.coefficient(i)) for i in range(size))
        scale = max(
            max((abs(c) for c in a.coeffs), default=0.0),
            max((abs(c) for c in b.coeffs), default=0.0),
            1.0,
        )
        return diff / scale

    def allclose(self, other: "Polynomial", rel_tol: float = FLOAT_REL_TOL) -> bool:
        """Equality for exact operands, coefficient-wise tolerance otherwise."""
        if self.mode == MODE_INT and other.mode == MODE_INT:
            return self.coeffs == other.coeffs
        return self.deviation(other) <= rel_tol

    def to_json(self) -> Dict[str, Any]:
        """Serialize as {"mode": ..., "coeffs": [c0, c1, ...]}, complex as [re, im]."""
        if self.mode == MODE_INT:
            coeffs: List[Any] = list(self.coeffs)
        else:
            coeffs = [[c.real, c.imag] for c in self.coeffs]  # type: ignore[union-attr]
        return {"mode": self.mode, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Polynomial":
        mode = data.get("mode")
        if mode not in (MODE_INT, MODE_COMPLEX):
            raise DomainError(f"Unknown coefficient mode: {mode!r}")
        raw = data.get("coeffs", [])
        if mode == MODE_INT:
            return cls(tuple(raw), mode)
        return cls(tuple(complex(re, im) for re, im in raw), mode)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            parts.append(_format_term(c, power, first=not parts))
        return " ".join(parts)


def _format_term(c: Coefficient, power: int, first: bool) -> str:
    if isinstance(c, int):
        sign = "-" if c < 0 else "+"
        magnitude = str(abs(c))
    else:
        sign = "+"
        magnitude = f"({c.real:g}{c.imag:+g}i)"
    if power > 0 and magnitude == "1":
        magnitude = ""
    var = "" if power == 0 else LAMBDA_SYMBOL if power == 1 else f"{LAMBDA_SYMBOL}^{power}"
    body = f"{magnitude}{var}"
    if first:
        return f"-{body}" if sign == "-" else body
    return f"{sign} {body}"


def _convolve(
    a: Tuple[Coefficient, ...], b: Tuple[Coefficient, ...], mode: CoefficientMode
) -> Tuple[Coefficient, ...]:
    if not a or not b:
        return ()
    if mode == MODE_COMPLEX:
        product = np.convolve(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
        return tuple(complex(c) for c in product)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    """Sum of two polynomials of the same mode."""
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Product of two polynomials of the same mode."""
    return p * q


def poly_scale(p: Polynomial, c: Coefficient) -> Polynomial:
    """Scalar multiple of a polynomial."""
    return p.scale(c)


def poly_product(factors: Iterable[Polynomial], mode: CoefficientMode = MODE_INT) -> Polynomial:
    """Product of a sequence of polynomials; the empty product is 1."""
    result = Polynomial.one(mode)
    for factor in factors:
        result = poly_mul(result, factor)
    return result


def poly_sum(terms: Iterable[Polynomial], mode: CoefficientMode = MODE_INT) -> Polynomial:
    """Sum in iteration order, which keeps float reductions reproducible."""
    result = Polynomial.zero(mode)
    for term in terms:
        result = poly_add(result, term)
    return result


def eval_at_zero(p: Polynomial) -> Coefficient:
    """Constant term; det/per from φ/ψ."""
    return p.eval_at_zero()
