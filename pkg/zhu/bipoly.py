# zhu/bipoly.py

"""
Polynomials in two commuting variables x, y with exact rational coefficients.

A(V(c, h)) is the polynomial ring C[x, y]; x is the left action of [omega]
and y the right action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from exactlin.matrix import as_rational, format_rational

Monomial = tuple[int, int]


@dataclass(frozen=True)
class BiPolynomial:
    coefficients: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.coefficients.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            v = as_rational(v)
            if v != 0:
                clean[(int(i), int(j))] = v
        object.__setattr__(self, "coefficients", clean)

    # --------------------------------------------------------------
    # Constructors
    # --------------------------------------------------------------
    @classmethod
    def constant(cls, value) -> "BiPolynomial":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "BiPolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPolynomial":
        return cls({(0, 1): 1})

    # --------------------------------------------------------------
    # Arithmetic
    # --------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, BiPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == BiPolynomial.constant(other).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __add__(self, other) -> "BiPolynomial":
        other = _lift(other)
        out = dict(self.coefficients)
        for k, v in other.coefficients.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BiPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPolynomial":
        return self.scale(-1)

    def __sub__(self, other) -> "BiPolynomial":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "BiPolynomial":
        return _lift(other) - self

    def __mul__(self, other) -> "BiPolynomial":
        other = _lift(other)
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), a in self.coefficients.items():
            for (i2, j2), b in other.coefficients.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + a * b
        return BiPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPolynomial":
        result = BiPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor) -> "BiPolynomial":
        factor = as_rational(factor)
        return BiPolynomial({k: v * factor for k, v in self.coefficients.items()})

    # --------------------------------------------------------------
    # Queries
    # --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coefficients.get((i, j), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self.coefficients), default=-1)

    def evaluate(self, x, y) -> Fraction:
        x, y = as_rational(x), as_rational(y)
        return sum((v * x ** i * y ** j for (i, j), v in self.coefficients.items()), Fraction(0))

    def swap(self) -> "BiPolynomial":
        """f(y, x)."""
        return BiPolynomial({(j, i): v for (i, j), v in self.coefficients.items()})

    def specialize_y(self, y) -> dict[int, Fraction]:
        """Coefficients (by power of x) of the univariate polynomial f(x, y0)."""
        y = as_rational(y)
        out: dict[int, Fraction] = {}
        for (i, j), v in self.coefficients.items():
            out[i] = out.get(i, Fraction(0)) + v * y ** j
        return {i: v for i, v in out.items() if v != 0}

    def normalize_monic_x(self) -> tuple["BiPolynomial", Fraction]:
        """
        Scale so the coefficient of x^d is 1, d the total degree.
        Returns the scaled polynomial and the factor that was applied.
        """
        lead = self.coefficient(self.degree, 0)
        if lead == 0:
            raise ValueError("no pure x-power of top degree to normalize by")
        factor = 1 / lead
        return self.scale(factor), factor

    # --------------------------------------------------------------
    # Rendering
    # --------------------------------------------------------------
    def monomials(self) -> list[Monomial]:
        """Graded-lex order with x before y: x^3, x^2 y, ..., y^3, x^2, ..."""
        return sorted(self.coefficients, key=lambda m: (-(m[0] + m[1]), -m[0]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        text = ""
        for i, j in self.monomials():
            v = self.coefficients[(i, j)]
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            magnitude = abs(v)
            if factors and magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(magnitude)] + factors)
            if not text:
                text = f"-{body}" if v < 0 else body
            else:
                text += f" - {body}" if v < 0 else f" + {body}"
        return text

    def to_payload(self) -> list[dict]:
        return [
            {"x": i, "y": j, "coefficient": format_rational(self.coefficients[(i, j)])}
            for i, j in self.monomials()
        ]


def _lift(value) -> BiPolynomial:
    if isinstance(value, BiPolynomial):
        return value
    return BiPolynomial.constant(value)
