# qseries/series.py

"""
Truncated q-series q^offset * (a_0 + a_1 q + ... + a_N q^N) with exact
rational coefficients. Every character handled here has integer-spaced
exponents, so a series is a rational offset plus an integer-indexed list.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from exactlin.matrix import as_rational, format_rational

from .exceptions import SeriesMismatchError, SeriesOrderError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QSeries:
    offset: Fraction
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series keeps at least the coefficient of q^offset")
        object.__setattr__(self, "offset", as_rational(self.offset))
        object.__setattr__(self, "coeffs", tuple(as_rational(v) for v in self.coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence, offset=0) -> "QSeries":
        return cls(as_rational(offset), tuple(coeffs))

    @classmethod
    def monomial(cls, order: int, exponent: int = 0, coefficient=1, offset=0) -> "QSeries":
        coeffs = [Fraction(0)] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = as_rational(coefficient)
        return cls(as_rational(offset), tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        """Coefficient of q^(offset + n)."""
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs)

    def nonzero_terms(self) -> list[tuple[Fraction, Fraction]]:
        """(exponent, coefficient) pairs with nonzero coefficient."""
        return [(self.offset + n, v) for n, v in enumerate(self.coeffs) if v != 0]

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.offset, self.coeffs[:order + 1])

    def scale(self, factor) -> "QSeries":
        factor = as_rational(factor)
        return QSeries(self.offset, tuple(v * factor for v in self.coeffs))

    def shift(self, k: int) -> "QSeries":
        """q^k * self."""
        return QSeries(self.offset + k, self.coeffs)

    # ------------------------------------------------------------------
    # Alignment
    # ------------------------------------------------------------------
    def gap(self, other: "QSeries") -> int:
        delta = other.offset - self.offset
        if delta.denominator != 1:
            raise SeriesMismatchError(
                f"offsets {self.offset} and {other.offset} are not integer-spaced"
            )
        return delta.numerator

    def align(self, other: "QSeries") -> tuple["QSeries", "QSeries"]:
        """
        Rewrite both series over the smaller offset, truncated to the exponent
        both of them know.
        """
        gap = self.gap(other)
        low, high = (self, other) if gap >= 0 else (other, self)
        gap = abs(gap)
        top = min(low.order, high.order + gap)
        padded = (Fraction(0),) * gap + high.coeffs
        first = QSeries(low.offset, low.coeffs[:top + 1])
        second = QSeries(low.offset, padded[:top + 1])
        return (first, second) if low is self else (second, first)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: "QSeries") -> "QSeries":
        a, b = self.align(other)
        return QSeries(a.offset, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "QSeries":
        return self.scale(-1)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[:order + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[:order + 1 - i]):
                out[i + j] += a * b
        return QSeries(self.offset + other.offset, tuple(out))

    def __pow__(self, exponent: int) -> "QSeries":
        base = self if exponent >= 0 else self.inverse()
        result = QSeries.monomial(base.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def inverse(self) -> "QSeries":
        """1/self; the leading coefficient must be nonzero."""
        lead = self.coeffs[0]
        if lead == 0:
            raise ZeroDivisionError("series with vanishing leading coefficient")
        out = [1 / lead]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-acc / lead)
        return QSeries(-self.offset, tuple(out))

    def __str__(self) -> str:
        terms = []
        for exponent, v in self.nonzero_terms():
            terms.append(f"{format_rational(v)}*q^({format_rational(exponent)})")
        return (" + ".join(terms) or "0") + f" + O(q^({format_rational(self.offset + self.order + 1)}))"


# ==============================================================================
# Products and standard series
# ==============================================================================

def check_order(order: int):
    if order < 0:
        raise SeriesOrderError(f"order must be >= 0, got {order}")


def euler_product(order: int, start: int = 1) -> QSeries:
    """prod_{n >= start} (1 - q^n), truncated at q^order."""
    check_order(order)
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for n in range(start, order + 1):
        for e in range(order, n - 1, -1):
            coeffs[e] -= coeffs[e - n]
    return QSeries(Fraction(0), tuple(coeffs))


def partition_numbers(order: int) -> list[int]:
    """p(0), ..., p(order) from 1 / prod (1 - q^n)."""
    check_order(order)
    counts = [0] * (order + 1)
    counts[0] = 1
    for n in range(1, order + 1):
        for e in range(n, order + 1):
            counts[e] += counts[e - n]
    return counts


def eta_series(order: int, power: int = 1) -> QSeries:
    """eta(q)^power = q^(power/24) prod (1 - q^n)^power."""
    check_order(order)
    product = euler_product(order) ** power
    return QSeries(Fraction(power, 24), product.coeffs)


def theta_series(order: int) -> QSeries:
    """sum over k in Z of q^(k^2)."""
    check_order(order)
    coeffs = [Fraction(0)] * (order + 1)
    k = 0
    while k * k <= order:
        coeffs[k * k] += 1 if k == 0 else 2
        k += 1
    return QSeries(Fraction(0), tuple(coeffs))
