# qseries/growth.py

"""
Coefficient-growth diagnostics. A scan over a finite window can only give
evidence: a witness n with |a_n| > n^k for every tested k suggests growth
faster than any polynomial, the absence of witnesses suggests a polynomial
bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from .exceptions import SeriesOrderError
from .series import QSeries

logger = logging.getLogger(__name__)

POLYNOMIAL = "polynomially-bounded"
SUPERPOLYNOMIAL = "superpolynomial-evidence"


@dataclass(frozen=True)
class GrowthReport:
    window: tuple[int, int]
    exponents: tuple[int, ...]
    witnesses: Mapping[int, int | None]
    verdict: str

    def __post_init__(self):
        if self.verdict == SUPERPOLYNOMIAL and any(
            self.witnesses.get(k) is None for k in self.exponents
        ):
            raise ValueError("superpolynomial evidence needs a witness for every exponent")


def growth_report(series: QSeries, window: tuple[int, int], exponents: Iterable[int]) -> GrowthReport:
    start, stop = window
    if start < 1 or stop < start:
        raise SeriesOrderError(f"window [{start}, {stop}] must satisfy 1 <= start <= stop")
    if stop > series.order:
        raise SeriesOrderError(
            f"window ends at {stop} but the series is truncated at order {series.order}"
        )
    exponents = tuple(exponents)
    witnesses: dict[int, int | None] = {}
    for k in exponents:
        witnesses[k] = next(
            (n for n in range(start, stop + 1) if abs(series[n]) > n ** k), None
        )
    found = bool(exponents) and all(witnesses[k] is not None for k in exponents)
    verdict = SUPERPOLYNOMIAL if found else POLYNOMIAL
    logger.info(f"growth scan on [{start}, {stop}] for k in {list(exponents)}: {verdict}")
    return GrowthReport((start, stop), exponents, witnesses, verdict)
