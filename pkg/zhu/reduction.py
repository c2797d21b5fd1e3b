# zhu/reduction.py

"""
Reduction of Verma-module elements to A(V(c, h)) = C[x, y].

A word is a tuple (n1, n2, ..., nk) of positive integers standing for
L(-n1) L(-n2) ... L(-nk) v, outermost mode first. Words need not be in PBW
order. Reduction modulo O(W) uses three rewrites:

    L(-m) w  ->  -2 L(-m+1) w - L(-m+2) w                        (m >= 3)
    L(-1) w  ->  x [w] - [w] y - (h + |w|) [w]
    L(-2) w  ->  2 [w] y - x [w] + (h + |w|) [w]

The last two come from solving the left and right actions of [omega],
x [w] = [(L(-2) + 2L(-1) + L(0)) w] and [w] y = [(L(-2) + L(-1)) w],
for [L(-1) w] and [L(-2) w].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from virasoro.verma import ModuleElement, VermaParams

from .bipoly import BiPolynomial
from .exceptions import ParamsMismatchError

logger = logging.getLogger(__name__)

Word = tuple[int, ...]

X = BiPolynomial.x()
Y = BiPolynomial.y()
ONE = BiPolynomial.constant(1)


@dataclass(frozen=True)
class TraceStep:
    """One rewrite: `word` was expressed through `children` by `rule`."""

    word: Word
    rule: str
    children: tuple[Word, ...]
    weight: Fraction

    def describe(self) -> str:
        target = ", ".join(_word_str(c) for c in self.children) or "1"
        return f"{_word_str(self.word)} --{self.rule}--> {target}"


@dataclass(frozen=True)
class ReductionTrace:
    element: Mapping[Word, Fraction]
    steps: tuple[TraceStep, ...]
    output: BiPolynomial
    h: Fraction = field(default=Fraction(0))

    def replay(self) -> BiPolynomial:
        """Recompute the output from the step log alone."""
        values: dict[Word, BiPolynomial] = {}
        for step in self.steps:
            values[step.word] = _apply_rule(step, values)
        total = BiPolynomial()
        for word, coef in self.element.items():
            total = total + values[word].scale(coef)
        return total


def _word_str(word: Word) -> str:
    return "".join(f"L(-{n})" for n in word) + "v"


def _apply_rule(step: TraceStep, values: Mapping[Word, BiPolynomial]) -> BiPolynomial:
    if step.rule == "vacuum":
        return ONE
    if step.rule == "lower":
        first, second = step.children
        return values[first].scale(-2) - values[second]
    inner = values[step.children[0]]
    if step.rule == "left":
        return X * inner - inner * Y - inner.scale(step.weight)
    if step.rule == "right":
        return (inner * Y).scale(2) - X * inner + inner.scale(step.weight)
    raise ValueError(f"unknown reduction rule {step.rule!r}")


def _rewrite(word: Word, h: Fraction) -> TraceStep:
    if not word:
        return TraceStep(word, "vacuum", (), h)
    first, rest = word[0], word[1:]
    weight = h + sum(rest)
    if first >= 3:
        # L(-m) + 2 L(-m+1) + L(-m+2) lies in O(W)
        return TraceStep(word, "lower", ((first - 1,) + rest, (first - 2,) + rest), weight)
    return TraceStep(word, "left" if first == 1 else "right", (rest,), weight)


class ZhuReducer:
    """
    Reduces elements of one Verma module V(c, h). The memo table only ever
    grows; returned polynomials are immutable.
    """

    def __init__(self, params: VermaParams):
        self.params = params
        self._memo: dict[Word, BiPolynomial] = {}

    def reduce_word(self, word: Word) -> BiPolynomial:
        word = tuple(word)
        if any(n < 1 for n in word):
            raise ValueError(f"words use creation modes L(-n), n >= 1; got {word}")
        if word not in self._memo:
            step = _rewrite(word, self.params.h)
            for child in step.children:
                self.reduce_word(child)
            self._memo[word] = _apply_rule(step, self._memo)
        return self._memo[word]

    def _check(self, element: ModuleElement):
        if element.params != self.params:
            raise ParamsMismatchError(
                f"element of V(c={element.params.c}, h={element.params.h}) given to a "
                f"reducer for V(c={self.params.c}, h={self.params.h})"
            )

    def reduce(self, element: ModuleElement) -> BiPolynomial:
        self._check(element)
        total = BiPolynomial()
        for word, coef in element.terms.items():
            total = total + self.reduce_word(word).scale(coef)
        return total

    def trace(self, element: ModuleElement) -> ReductionTrace:
        """Reduce while logging every rewrite, children before parents."""
        self._check(element)
        steps: list[TraceStep] = []
        seen: set[Word] = set()

        def visit(word: Word):
            if word in seen:
                return
            step = _rewrite(word, self.params.h)
            for child in step.children:
                visit(child)
            seen.add(word)
            steps.append(step)
            logger.debug(step.describe())

        for word in element.terms:
            visit(tuple(word))
        return ReductionTrace(
            element=dict(element.terms),
            steps=tuple(steps),
            output=self.reduce(element),
            h=self.params.h,
        )


def reduce_to_bipoly(element: ModuleElement) -> BiPolynomial:
    return ZhuReducer(element.params).reduce(element)
