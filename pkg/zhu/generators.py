# zhu/generators.py

"""
The generator f_r(x, y) of the ideal cutting A(L(1, r^2)) out of C[x, y],
computed three independent ways:

  * the closed product (x - y) * prod_{i=1..r} ((x - y)^2 - 2 i^2 (x + y) + i^4)
  * reducing the level 2r+1 singular vector of V(1, r^2)
  * solving for the coefficients of f(n^2, y) = prod_k (y - k^2), k = n-r..n+r,
    at sample nodes n and interpolating them in x

Every route returns f normalized so the coefficient of x^(2r+1) is 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from exactlin.exceptions import SingularMatrixError
from exactlin.matrix import Matrix, interpolate, solve
from virasoro.verma import VermaParams, singular_vectors

from .bipoly import BiPolynomial
from .exceptions import PreconditionError, SingularVectorNotFoundError
from .reduction import ZhuReducer

logger = logging.getLogger(__name__)

X = BiPolynomial.x()
Y = BiPolynomial.y()


@dataclass(frozen=True)
class NormalizedGenerator:
    """A generator together with the scalar that made it monic in x."""

    polynomial: BiPolynomial
    scalar: Fraction
    route: str


def _require_positive(r: int):
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise PreconditionError(f"generator index must be a positive integer, got {r!r}")


def product_generator(r: int) -> BiPolynomial:
    """The closed product for r >= 0; r = 0 gives x - y."""
    d = X - Y
    f = d
    for i in range(1, r + 1):
        f = f * (d * d - (X + Y).scale(2 * i * i) + i ** 4)
    return f


def closed_form_generator(r: int) -> BiPolynomial:
    _require_positive(r)
    return product_generator(r).normalize_monic_x()[0]


def normalized_from_singular_vector(r: int) -> NormalizedGenerator:
    if r not in (1, 2):
        raise PreconditionError(f"singular-vector route is run for r in {{1, 2}}, got {r!r}")
    params = VermaParams(1, r * r)
    level = 2 * r + 1
    vectors = singular_vectors(params, level)
    if len(vectors) != 1:
        raise SingularVectorNotFoundError(
            f"expected one singular vector in V(1, {r * r}) at level {level}, found {len(vectors)}"
        )
    image = ZhuReducer(params).reduce(vectors[0])
    if image.degree != level:
        raise SingularVectorNotFoundError(
            f"image of the singular vector has degree {image.degree}, expected {level}"
        )
    polynomial, scalar = image.normalize_monic_x()
    return NormalizedGenerator(polynomial, scalar, "singular-vector")


def generator_from_singular_vector(r: int) -> BiPolynomial:
    return normalized_from_singular_vector(r).polynomial


def sample_nodes(r: int) -> list[int]:
    return list(range(r, 3 * r + 2))


def solve_sample(r: int, n: int) -> tuple[Fraction, ...]:
    """
    a_0(n^2), ..., a_2r(n^2) from sum_i a_i (k^2)^i = -(k^2)^(2r+1), one
    equation per k in n-r..n+r.
    """
    ks = range(n - r, n + r + 1)
    system = Matrix.from_rows([[(k * k) ** j for j in range(2 * r + 1)] for k in ks])
    rhs = [-((k * k) ** (2 * r + 1)) for k in ks]
    return solve(system, rhs)


def normalized_by_vandermonde(r: int) -> NormalizedGenerator:
    _require_positive(r)
    nodes = sample_nodes(r)
    try:
        samples = [solve_sample(r, n) for n in nodes]
    except SingularMatrixError as exc:
        raise SingularMatrixError(f"sample system for r={r} is singular: {exc}") from exc

    squares = [n * n for n in nodes]
    top = 2 * r + 1
    f = Y ** top
    for i in range(top):
        coeffs = interpolate(squares, [s[i] for s in samples])
        degree = max((d for d, v in enumerate(coeffs) if v != 0), default=-1)
        if degree > top - i:
            logger.warning(f"a_{i}(x) came out with degree {degree} > {top - i}")
        f = f + BiPolynomial({(d, i): v for d, v in enumerate(coeffs)})

    polynomial, scalar = f.normalize_monic_x()
    logger.info(f"vandermonde route r={r}: normalization scalar {scalar}")
    return NormalizedGenerator(polynomial, scalar, "vandermonde")


def generator_by_vandermonde(r: int) -> BiPolynomial:
    return normalized_by_vandermonde(r).polynomial
