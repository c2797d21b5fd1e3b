# exactlin/matrix.py

"""
Exact dense matrices over the rationals.

Entries are `fractions.Fraction`, so no rounding ever happens. Rank and
determinant use Bareiss' fraction-free elimination; kernels and solutions come
from a reduced row echelon form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import DimensionMismatchError, SingularMatrixError

logger = logging.getLogger(__name__)

Rational = Fraction
Vector = tuple[Fraction, ...]


def as_rational(value) -> Fraction:
    """
    Coerce ints, Fractions and "p/q" literals to a Fraction.
    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ==============================================================================
# Matrix
# ==============================================================================

@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("ragged rows")
        entries = tuple(as_rational(v) for r in rows for v in r)
        return cls(len(rows), width, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                entries.append(sum((row[k] * other[k, j] for k in range(self.cols)), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(entries))

    def matvec(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} does not fit {self.cols} columns"
            )
        vector = [as_rational(v) for v in vector]
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector)), Fraction(0))
            for i in range(self.rows)
        )

    def swap_rows(self, i: int, j: int) -> "Matrix":
        rows = self.to_rows()
        rows[i], rows[j] = rows[j], rows[i]
        return Matrix.from_rows(rows, cols=self.cols)


# ==============================================================================
# Elimination kernels
# ==============================================================================

def _bareiss(matrix: Matrix) -> tuple[list[list[Fraction]], list[int], int]:
    """
    Fraction-free forward elimination.

    Returns the echelon rows, the pivot columns and the sign picked up from row
    exchanges. Each update divides by the previous pivot, which keeps the
    entries equal to minors of the input instead of letting them grow.
    """
    a = matrix.to_rows()
    m, n = matrix.rows, matrix.cols
    sign = 1
    previous = Fraction(1)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[r], a[pivot] = a[pivot], a[r]
            sign = -sign
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / previous
            a[i][c] = Fraction(0)
        previous = a[r][c]
        pivots.append(c)
        r += 1
    return a, pivots, sign


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    a = matrix.to_rows()
    m, n = matrix.rows, matrix.cols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(m, n, tuple(v for row in a for v in row)), pivots


# ==============================================================================
# Public operations
# ==============================================================================

def rank(matrix: Matrix) -> int:
    _, pivots, _ = _bareiss(matrix)
    return len(pivots)


def det(matrix: Matrix) -> Fraction:
    if not matrix.is_square:
        raise DimensionMismatchError(
            f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}"
        )
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    echelon, pivots, sign = _bareiss(matrix)
    if len(pivots) < n:
        return Fraction(0)
    return sign * echelon[n - 1][n - 1]


def normalize_leading(vector: Sequence[Fraction]) -> Vector:
    """Scale so the first nonzero entry is 1; the zero vector is returned as is."""
    lead = next((v for v in vector if v != 0), None)
    if lead is None:
        return tuple(vector)
    return tuple(v / lead for v in vector)


def nullspace(matrix: Matrix) -> list[Vector]:
    """
    Exact basis of the right kernel, one vector per free column, each scaled
    so its first nonzero entry is 1.
    """
    reduced, pivots = rref(matrix)
    free = [j for j in range(matrix.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * matrix.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        basis.append(normalize_leading(v))
    logger.debug(f"nullspace of {matrix.rows}x{matrix.cols}: dimension {len(basis)}")
    return basis


def solve(matrix: Matrix, rhs: Sequence) -> Vector:
    """Unique solution of matrix * v = rhs for a nonsingular square matrix."""
    if not matrix.is_square:
        raise DimensionMismatchError(
            f"solve needs a square matrix, got {matrix.rows}x{matrix.cols}"
        )
    if len(rhs) != matrix.rows:
        raise DimensionMismatchError(
            f"right-hand side has {len(rhs)} entries, matrix has {matrix.rows} rows"
        )
    n = matrix.rows
    augmented = Matrix.from_rows(
        [list(matrix.row(i)) + [as_rational(rhs[i])] for i in range(n)], cols=n + 1
    )
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise SingularMatrixError(f"{n}x{n} system is singular")
    return tuple(reduced[i, n] for i in range(n))


def vandermonde(nodes: Iterable) -> Matrix:
    nodes = [as_rational(x) for x in nodes]
    n = len(nodes)
    return Matrix.from_rows([[x ** j for j in range(n)] for x in nodes], cols=n)


def interpolate(nodes: Sequence, values: Sequence) -> Vector:
    """
    Coefficients c_0..c_{n-1} (lowest degree first) of the unique polynomial
    of degree < n through the given points.
    """
    if len(nodes) != len(values):
        raise DimensionMismatchError("interpolation needs one value per node")
    if len(set(as_rational(x) for x in nodes)) != len(nodes):
        raise SingularMatrixError("interpolation nodes must be distinct")
    return solve(vandermonde(nodes), values)
