# griess/algebra.py

"""
States of the vertex algebra as combinations of mode words.

A word g1_(n1) g2_(n2) ... base is stored outermost mode first. The base is
the vacuum "1", a weight-2 generator (x, u, y) or an opaque product
"[a j b]" standing for a_j b when no rule evaluates it. Coefficients are
sympy expressions in the unknowns a, b, alpha and in pairing symbols
"<s,t>".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import sympy as sp

from .exceptions import InsufficientRulesError

VACUUM = "1"
VIRASORO = "L"
GENERATORS = ("x", "u", "y")
CENTRAL_CHARGE = sp.Integer(1)

A, B = sp.symbols("a b")
ALPHA = sp.Symbol("alpha")

_OPAQUE = re.compile(r"^\[([a-z])(\d)([a-z])\]$")


def opaque_name(left: str, j: int, right: str) -> str:
    return f"[{left}{j}{right}]"


def parse_opaque(name: str) -> tuple[str, int, str] | None:
    match = _OPAQUE.match(name)
    if not match:
        return None
    return match.group(1), int(match.group(2)), match.group(3)


def generator_rank(name: str) -> int:
    return GENERATORS.index(name)


def is_generator(name: str) -> bool:
    return name in GENERATORS


def field_weight(name: str) -> int:
    if name == VACUUM:
        return 0
    if name == VIRASORO or is_generator(name):
        return 2
    parsed = parse_opaque(name)
    if parsed is None:
        raise InsufficientRulesError(f"unknown field {name!r}")
    return 3 - parsed[1]


def pairing_symbol(left: str, right: str) -> sp.Symbol:
    first, second = sorted((left, right))
    return sp.Symbol(f"<{first},{second}>")


def as_fraction(value) -> Fraction:
    """An indeterminate-free sympy number as a Fraction."""
    value = sp.expand(sp.sympify(value))
    if value.free_symbols:
        raise InsufficientRulesError(
            f"value still depends on {sorted(str(s) for s in value.free_symbols)}: {value}"
        )
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True, order=True)
class Mode:
    field: str
    index: int

    @property
    def is_virasoro(self) -> bool:
        return self.field == VIRASORO

    @property
    def is_creation(self) -> bool:
        return self.index <= -1

    @property
    def shift(self) -> int:
        """Weight added to a state the mode acts on."""
        if self.is_virasoro:
            return -self.index
        return field_weight(self.field) - self.index - 1

    def __str__(self) -> str:
        if self.is_virasoro:
            return f"L({self.index})"
        return f"{self.field}_{self.index}"


@dataclass(frozen=True, order=True)
class Word:
    modes: tuple[Mode, ...] = ()
    base: str = VACUUM

    @property
    def weight(self) -> int:
        return field_weight(self.base) + sum(m.shift for m in self.modes)

    @property
    def is_bare(self) -> bool:
        return not self.modes

    @property
    def head(self) -> Mode:
        return self.modes[0]

    def tail(self) -> "Word":
        return Word(self.modes[1:], self.base)

    def prepend(self, mode: Mode) -> "Word":
        return Word((mode,) + self.modes, self.base)

    def __str__(self) -> str:
        return " ".join([str(m) for m in self.modes] + [self.base])


def word(*modes: tuple[str, int], base: str = VACUUM) -> Word:
    """word(("x", 1), ("L", -2)) is x_1 L(-2) 1."""
    return Word(tuple(Mode(f, n) for f, n in modes), base)


OMEGA = word((VIRASORO, -2))


class State:
    """Finite combination of words with sympy coefficients; zero terms are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean = {}
        for w, coef in (terms or {}).items():
            coef = sp.expand(sp.sympify(coef))
            if coef != 0:
                clean[w] = coef
        self.terms: dict[Word, sp.Expr] = clean

    @classmethod
    def of(cls, w: Word, coefficient=1) -> "State":
        return cls({w: coefficient})

    @classmethod
    def bare(cls, base: str, coefficient=1) -> "State":
        return cls({Word((), base): coefficient})

    @classmethod
    def zero(cls) -> "State":
        return cls()

    @classmethod
    def total(cls, states: Iterable["State"]) -> "State":
        out: dict[Word, sp.Expr] = {}
        for s in states:
            for w, coef in s.terms.items():
                out[w] = out.get(w, 0) + coef
        return cls(out)

    def __add__(self, other: "State") -> "State":
        return State.total((self, other))

    def __sub__(self, other: "State") -> "State":
        return State.total((self, other.scale(-1)))

    def __neg__(self) -> "State":
        return self.scale(-1)

    def scale(self, factor) -> "State":
        factor = sp.sympify(factor)
        return State({w: coef * factor for w, coef in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Word) -> sp.Expr:
        return self.terms.get(w, sp.Integer(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda item: (item[0].weight, str(item[0])))

    def weights(self) -> set[int]:
        return {w.weight for w in self.terms}

    def subs(self, values: Mapping) -> "State":
        return State({w: coef.subs(values) for w, coef in self.terms.items()})

    @property
    def free_symbols(self) -> set:
        out = set()
        for coef in self.terms.values():
            out |= coef.free_symbols
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"({coef})*{w}" for w, coef in self.items())

    def __repr__(self) -> str:
        return f"State({self})"
