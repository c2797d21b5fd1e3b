# virasoro/verma.py

"""
Verma modules V(c, h) for the Virasoro algebra.

A basis vector L(-n1)...L(-nk)v with n1 >= ... >= nk >= 1 is indexed by the
partition (n1, ..., nk). Modes act by normal ordering: a mode is commuted to
the right past every L(-ni) with

    [L(m), L(n)] = (m - n) L(m + n) + delta(m + n, 0) (m^3 - m) c / 12

until it reaches v, where L(n)v = 0 for n > 0 and L(0)v = hv.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterator, Mapping

from exactlin.matrix import Matrix, as_rational, nullspace, rank, rref

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]


# ==============================================================================
# Partitions
# ==============================================================================

def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> list[Partition]:
    """All partitions of n, reverse-lexicographic: (4), (3,1), (2,2), ..."""
    if n < 0:
        raise ValueError("partitions need n >= 0")
    return list(_partitions(n, n))


def partition_count(n: int) -> int:
    return len(partitions(n)) if n >= 0 else 0


# ==============================================================================
# Weights
# ==============================================================================

def exact_square_root(value) -> int | None:
    """m >= 0 with m^2 == value, or None."""
    value = as_rational(value)
    if value < 0 or value.denominator != 1:
        return None
    root = isqrt(value.numerator)
    return root if root * root == value.numerator else None


def quarter_square_root(h) -> int | None:
    """m >= 0 with h == m^2 / 4, or None. These are the reducible weights at c = 1."""
    return exact_square_root(4 * as_rational(h))


# ==============================================================================
# Types
# ==============================================================================

@dataclass(frozen=True)
class VermaParams:
    c: Fraction
    h: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        object.__setattr__(self, "h", as_rational(self.h))


@dataclass(frozen=True)
class ModuleElement:
    """
    Finite combination of PBW vectors of one level. Zero coefficients are never
    stored; the zero element keeps an explicit level.
    """

    params: VermaParams
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)
    level: int = 0

    def __post_init__(self):
        clean = {tuple(k): as_rational(v) for k, v in self.terms.items() if v != 0}
        for parts in clean:
            if sum(parts) != self.level:
                raise ValueError(
                    f"term {parts} has weight {sum(parts)}, element level is {self.level}"
                )
        object.__setattr__(self, "terms", clean)

    @classmethod
    def highest_weight(cls, params: VermaParams) -> "ModuleElement":
        return cls(params, {(): Fraction(1)}, 0)

    @classmethod
    def basis_vector(cls, params: VermaParams, parts: Partition) -> "ModuleElement":
        return cls(params, {tuple(parts): Fraction(1)}, sum(parts))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, parts: Partition) -> Fraction:
        return self.terms.get(tuple(parts), Fraction(0))

    def scale(self, factor) -> "ModuleElement":
        factor = as_rational(factor)
        return ModuleElement(
            self.params, {k: v * factor for k, v in self.terms.items()}, self.level
        )

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if other.params != self.params:
            raise ValueError("cannot add elements of different Verma modules")
        if other.level != self.level and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add elements of different levels")
        if self.is_zero():
            return other
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return ModuleElement(self.params, terms, self.level)

    def to_vector(self) -> tuple[Fraction, ...]:
        return tuple(self.coefficient(p) for p in partitions(self.level))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        order = {p: i for i, p in enumerate(partitions(self.level))}
        pieces = []
        for parts in sorted(self.terms, key=order.__getitem__):
            word = "".join(f"L(-{n})" for n in parts) + "v"
            pieces.append(f"({self.terms[parts]})*{word}")
        return " + ".join(pieces)


# ==============================================================================
# Module action
# ==============================================================================

class VermaModule:
    """
    Caches the action of single modes on PBW basis vectors of V(c, h).
    Instances never mutate what they have returned.
    """

    def __init__(self, params: VermaParams):
        self.params = params
        self._cache: dict[tuple[int, Partition], tuple[tuple[Partition, Fraction], ...]] = {}

    def act(self, m: int, parts: Partition) -> dict[Partition, Fraction]:
        return dict(self._act(m, tuple(parts)))

    def _act(self, m: int, parts: Partition):
        key = (m, parts)
        if key not in self._cache:
            self._cache[key] = tuple(
                (k, v) for k, v in self._compute(m, parts).items() if v != 0
            )
        return self._cache[key]

    def _compute(self, m: int, parts: Partition) -> dict[Partition, Fraction]:
        c, h = self.params.c, self.params.h
        if not parts:
            if m > 0:
                return {}
            if m == 0:
                return {(): h}
            return {(-m,): Fraction(1)}

        if m == 0:
            return {parts: h + sum(parts)}

        # already in PBW order
        if m < 0 and -m >= parts[0]:
            return {(-m,) + parts: Fraction(1)}

        first, rest = parts[0], parts[1:]
        result: dict[Partition, Fraction] = {}

        def accumulate(items, factor):
            for k, v in items:
                result[k] = result.get(k, Fraction(0)) + factor * v

        # L(m) L(-first) rest = L(-first) L(m) rest + [L(m), L(-first)] rest
        for mu, coef in self._act(m, rest):
            accumulate(self._act(-first, mu), coef)
        if m + first != 0:
            accumulate(self._act(m - first, rest), Fraction(m + first))
        if m == first:
            accumulate(((rest, Fraction(1)),), Fraction(m ** 3 - m, 12) * c)
        return result

    def apply(self, m: int, element: ModuleElement) -> ModuleElement:
        if element.params != self.params:
            raise ValueError("element belongs to a different Verma module")
        terms: dict[Partition, Fraction] = {}
        for parts, coef in element.terms.items():
            for k, v in self._act(m, parts):
                terms[k] = terms.get(k, Fraction(0)) + coef * v
        return ModuleElement(self.params, terms, element.level - m)


_modules: dict[VermaParams, VermaModule] = {}


def verma_module(params: VermaParams) -> VermaModule:
    if params not in _modules:
        _modules[params] = VermaModule(params)
    return _modules[params]


# ==============================================================================
# Operations
# ==============================================================================

def apply_mode(m: int, element: ModuleElement) -> ModuleElement:
    """L(m) * element, expressed in the PBW basis."""
    return verma_module(element.params).apply(m, element)


def gram_matrix(params: VermaParams, level: int) -> Matrix:
    """
    Shapovalov form at one level. Entry (lam, mu) is the coefficient of v in
    L(mu_k)...L(mu_1) L(-lam_1)...L(-lam_j) v.
    """
    if level < 0:
        raise ValueError("level must be >= 0")
    module = verma_module(params)
    basis = partitions(level)
    rows = []
    for lam in basis:
        row = []
        for mu in basis:
            vec = ModuleElement.basis_vector(params, lam)
            for part in mu:
                vec = module.apply(part, vec)
            row.append(vec.coefficient(()))
        rows.append(row)
    return Matrix.from_rows(rows, cols=len(basis))


def annihilation_matrix(params: VermaParams, level: int) -> Matrix:
    """
    Columns are the PBW vectors at `level`; rows are the coordinates of their
    images under L(1) (at level - 1) followed by L(2) (at level - 2).
    """
    module = verma_module(params)
    basis = partitions(level)
    targets = [(1, p) for p in partitions(level - 1)]
    if level >= 2:
        targets += [(2, p) for p in partitions(level - 2)]
    columns = []
    for lam in basis:
        images = {
            1: module.apply(1, ModuleElement.basis_vector(params, lam)),
            2: module.apply(2, ModuleElement.basis_vector(params, lam)),
        }
        columns.append([images[m].coefficient(p) for m, p in targets])
    rows = [[col[i] for col in columns] for i in range(len(targets))]
    return Matrix.from_rows(rows, cols=len(basis))


def singular_vectors(params: VermaParams, level: int) -> list[ModuleElement]:
    """
    Basis of the vectors at `level` killed by L(1) and L(2), hence by every
    L(n) with n > 0. Each basis vector has leading coefficient 1 in
    reverse-lexicographic partition order.
    """
    if level < 1:
        raise ValueError("singular vectors are searched from level 1")
    basis = partitions(level)
    kernel = nullspace(annihilation_matrix(params, level))
    if not kernel:
        return []
    reduced, pivots = rref(Matrix.from_rows(kernel, cols=len(basis)))
    vectors = []
    for i in range(len(pivots)):
        row = reduced.row(i)
        vectors.append(
            ModuleElement(params, {p: row[j] for j, p in enumerate(basis)}, level)
        )
    logger.info(
        f"V(c={params.c}, h={params.h}): {len(vectors)} singular vector(s) at level {level}"
    )
    return vectors


def graded_dims_irreducible(params: VermaParams, max_level: int) -> list[int]:
    """Graded dimensions of L(c, h): the Gram ranks at levels 0..max_level."""
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    return [rank(gram_matrix(params, n)) for n in range(max_level + 1)]


def first_singular_level(params: VermaParams, max_level: int) -> int | None:
    """First level where the Gram rank drops below p(n), or None up to max_level."""
    for n, dim in enumerate(graded_dims_irreducible(params, max_level)):
        if dim < partition_count(n):
            return n
    return None
