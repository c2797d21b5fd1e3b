# zhu/fusion.py

"""
Fusion dimensions for L(1, 0)-modules.

For modules L(1, m^2) x L(1, n^2) -> L(1, k^2) the intertwiner space is
nonzero exactly when f(k^2, n^2) vanishes for the generator f of
A(L(1, m^2)). Every answer from the interval rule is cross-checked against
that zero locus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from virasoro.verma import exact_square_root

from .exceptions import FusionCriterionMismatchError, PreconditionError
from .generators import product_generator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FusionEntry:
    m: int
    n: int
    k: int
    dim: int


def _require_index(name: str, value) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise PreconditionError(f"{name} must be a non-negative integer, got {value!r}")
    return value


def _check(rule: int, value: Fraction, label: str) -> int:
    criterion = int(value == 0)
    if criterion != rule:
        raise FusionCriterionMismatchError(
            f"{label}: interval rule gives {rule}, generator value is {value}"
        )
    return rule


def fusion_dim_squares(m: int, n: int, k: int) -> int:
    """dim of intertwiners of type (L(1,k^2) over L(1,m^2), L(1,n^2))."""
    for name, value in (("m", m), ("n", n), ("k", k)):
        _require_index(name, value)
    rule = int(abs(n - m) <= k <= n + m)
    # the smaller index's generator, read at the larger weight
    low, high = min(m, n), max(m, n)
    value = product_generator(low).evaluate(k * k, high * high)
    return _check(rule, value, f"fusion({m}, {n}, {k})")


def fusion_dim_generic(m: int, n: int, k: int) -> int:
    """
    L(1, m^2) x L(1, n) -> L(1, k) with n not a perfect square: 1 iff k == n.
    """
    _require_index("m", m)
    _require_index("k", k)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PreconditionError(f"n must be a positive integer, got {n!r}")
    if exact_square_root(n) is not None:
        raise PreconditionError(f"n = {n} is a perfect square; use fusion_dim_squares")
    rule = int(k == n)
    value = product_generator(m).evaluate(k, n)
    return _check(rule, value, f"fusion_generic({m}, {n}, {k})")


def fusion_dim_nonsquare_pair(m: int, n: int) -> int:
    """
    Intertwiners L(1, m) x L(1, n) -> U vanish for distinct non-square m, n and
    any highest-weight U of highest weight a square.
    """
    for name, value in (("m", m), ("n", n)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {value!r}")
        if exact_square_root(value) is not None:
            raise PreconditionError(f"{name} = {value} is a perfect square")
    if m == n:
        raise PreconditionError(f"weights must differ, both are {m}")
    return 0


def fusion_table(max_m: int, max_n: int, max_k: int) -> list[FusionEntry]:
    entries = [
        FusionEntry(m, n, k, fusion_dim_squares(m, n, k))
        for m in range(max_m + 1)
        for n in range(max_n + 1)
        for k in range(max_k + 1)
    ]
    logger.info(
        f"fusion table up to ({max_m}, {max_n}, {max_k}): "
        f"{sum(e.dim for e in entries)} nonzero of {len(entries)}"
    )
    return entries


def contracted_generator(m: int, n: int) -> dict[int, Fraction]:
    """
    f(x, n^2) for the generator of A(L(1, m^2)), taking the smaller index's
    generator as in fusion_dim_squares. Its roots are the k^2 with
    |m - n| <= k <= m + n. Keys are powers of x.
    """
    _require_index("m", m)
    _require_index("n", n)
    low, high = min(m, n), max(m, n)
    return product_generator(low).normalize_monic_x()[0].specialize_y(high * high)


def contracted_roots(m: int, n: int) -> list[int]:
    return [k * k for k in range(abs(m - n), m + n + 1)]
