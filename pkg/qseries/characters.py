# qseries/characters.py

"""
q-characters ch M = q^(h - c/24) * sum_n dim M_n q^n of Virasoro modules,
the lattice identity for the rank-one lattice with (alpha, alpha) = 2 and
the sl2 tensor rule that organizes its multiplicities.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from exactlin.matrix import as_rational
from virasoro.verma import exact_square_root, quarter_square_root

from .exceptions import InvalidWeightError, UnsupportedWeightError
from .series import QSeries, check_order, euler_product, eta_series, partition_numbers, theta_series

logger = logging.getLogger(__name__)


def verma_character(c, h, order: int) -> QSeries:
    check_order(order)
    c, h = as_rational(c), as_rational(h)
    return QSeries(h - c / 24, tuple(partition_numbers(order)))


def irr_character_c1(h, order: int) -> QSeries:
    """
    Character of L(1, h). For h = m^2 the maximal submodule is V(1, (m+1)^2),
    so the graded dimensions are p(n) - p(n - 2m - 1). Weights that are not a
    quarter square give an irreducible Verma module.
    """
    check_order(order)
    h = as_rational(h)
    m = exact_square_root(h)
    if m is not None:
        p = partition_numbers(order)
        step = 2 * m + 1
        coeffs = [p[n] - (p[n - step] if n >= step else 0) for n in range(order + 1)]
        return QSeries(h - Fraction(1, 24), tuple(coeffs))
    if quarter_square_root(h) is not None:
        raise UnsupportedWeightError(
            f"h = {h} is an odd quarter square; its submodule structure is not modelled"
        )
    return verma_character(1, h, order)


def effective_central_charge(c, lambda_min) -> Fraction:
    """c - 24 * lambda_min, lambda_min the least conformal weight."""
    return as_rational(c) - 24 * as_rational(lambda_min)


# ==============================================================================
# Lattice identity
# ==============================================================================

@dataclass(frozen=True)
class LatticeCheck:
    order: int
    holds: bool
    residual: QSeries
    virasoro_side: QSeries
    theta: QSeries


def lattice_character(order: int) -> QSeries:
    """theta / eta, the character of the lattice vertex algebra."""
    check_order(order)
    return theta_series(order) * eta_series(order, -1)


def virasoro_decomposition(order: int) -> QSeries:
    """eta * sum_{m >= 0} (2m + 1) ch L(1, m^2), truncated at q^order."""
    check_order(order)
    eta = eta_series(order)
    total = QSeries.monomial(order, coefficient=0)
    m = 0
    while m * m <= order:
        total = total + (eta * irr_character_c1(m * m, order)).scale(2 * m + 1)
        m += 1
    return total


def lattice_decomposition_check(order: int) -> LatticeCheck:
    side = virasoro_decomposition(order)
    theta = theta_series(order)
    residual = side - theta
    holds = residual.is_zero()
    logger.info(f"lattice decomposition through q^{order}: {'holds' if holds else 'FAILS'}")
    return LatticeCheck(order, holds, residual, side, theta)


def sl2_tensor_multiplicities(d1: int, d2: int) -> list[int]:
    """Highest weights of W_d1 (x) W_d2, each with multiplicity one."""
    for d in (d1, d2):
        if not isinstance(d, int) or isinstance(d, bool) or d < 0 or d % 2:
            raise InvalidWeightError(f"weights must be even and non-negative, got {d!r}")
    return list(range(abs(d1 - d2), d1 + d2 + 1, 2))


def partition_gap_series(order: int) -> QSeries:
    """(1 - q) / prod_{n >= 2} (1 - q^n): eta times 1 / prod_{n > 1} (1 - q^n)^2."""
    check_order(order)
    one_minus_q = QSeries.monomial(order) - QSeries.monomial(order, exponent=1)
    return one_minus_q * euler_product(order, start=2).inverse()
