# griess/engine.py

"""
Normal-ordering and pairing engine for the weight-2 mode calculus.

Normal words put Virasoro creation modes outside, sorted by index, then
creation modes of the weight-2 fields, then at most the irreducible
remainder: an opaque field applied to a generator or a bare base. Every
rewrite goes through a rule of the configured RuleSet, and every session
counts its steps against the rewrite budget.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field, replace
from math import factorial
from typing import Mapping

import sympy as sp

from .algebra import (
    CENTRAL_CHARGE,
    GENERATORS,
    OMEGA,
    VACUUM,
    VIRASORO,
    Mode,
    State,
    Word,
    field_weight,
    generator_rank,
    is_generator,
    opaque_name,
    pairing_symbol,
    parse_opaque,
)
from .exceptions import InsufficientRulesError
from .rules import STANDARD_RULES, Rule, RuleSet

logger = logging.getLogger(__name__)

ProductKey = tuple[str, int, str]

L_MINUS_ONE = Mode(VIRASORO, -1)


def _pair_key(left: str, right: str) -> tuple[str, str]:
    return tuple(sorted((left, right)))


def _binomial(top: int, j: int) -> sp.Rational:
    """binom(top, j) for any integer top."""
    value = sp.Integer(1)
    for i in range(j):
        value *= top - i
    return value / factorial(j)


@dataclass(frozen=True)
class EngineConfig:
    """
    Known facts of one engine configuration.

    products maps (g, j, h) to the state g_j h for generators g, h and
    j in {0, 1}; vanishing lists creation products g_n h known to be zero;
    pairings maps pairs of generators to their invariant form value. Pairings
    that are not listed stay indeterminate as "<s,t>".
    """

    name: str
    products: Mapping[ProductKey, State] = field(default_factory=dict)
    pairings: Mapping[tuple[str, str], object] = field(default_factory=dict)
    vanishing: frozenset[ProductKey] = frozenset()
    rules: RuleSet = STANDARD_RULES
    weight_cap: int = 6
    rewrite_budget: int = 20000

    def __post_init__(self):
        object.__setattr__(
            self,
            "pairings",
            {_pair_key(*key): sp.sympify(value) for key, value in self.pairings.items()},
        )
        object.__setattr__(self, "products", dict(self.products))
        object.__setattr__(self, "vanishing", frozenset(self.vanishing))

    def pairing(self, left: str, right: str) -> sp.Expr:
        return self.pairings.get(_pair_key(left, right), pairing_symbol(left, right))

    def with_facts(
        self,
        *,
        name: str | None = None,
        products: Mapping[ProductKey, State] | None = None,
        pairings: Mapping[tuple[str, str], object] | None = None,
        vanishing=(),
        rules: tuple[Rule, ...] = (),
        weight_cap: int | None = None,
    ) -> "EngineConfig":
        return replace(
            self,
            name=name or self.name,
            products={**self.products, **(products or {})},
            pairings={**self.pairings, **{_pair_key(*k): v for k, v in (pairings or {}).items()}},
            vanishing=self.vanishing | frozenset(vanishing),
            rules=self.rules.extended(*rules),
            weight_cap=weight_cap if weight_cap is not None else self.weight_cap,
        )


class GriessEngine:
    def __init__(self, config: EngineConfig):
        self.config = config

    def session(self, rng: random.Random | None = None) -> "RewriteSession":
        return RewriteSession(self.config, rng)

    def normalize(self, state: State, rng: random.Random | None = None) -> State:
        session = self.session(rng)
        result = session.normalize(state)
        logger.debug(f"[{self.config.name}] normalized in {session.steps} steps: {result}")
        return result

    def apply(self, mode: Mode, state: State) -> State:
        session = self.session()
        return session.apply_state(mode, session.normalize(state))

    def pair(self, left: State, right: State) -> sp.Expr:
        """Invariant form (left, right); left is rewritten by adjunction, never normalized."""
        session = self.session()
        value = session.pair(left, right)
        logger.debug(f"[{self.config.name}] pairing in {session.steps} steps: {value}")
        return value


class RewriteSession:
    """One rewriting run: a step counter and a memo of mode actions on normal words."""

    def __init__(self, config: EngineConfig, rng: random.Random | None = None, swaps: int = 4):
        self.config = config
        self.rules = config.rules
        self.rng = rng
        self.swaps_left = swaps if rng is not None else 0
        self.steps = 0
        self._memo: dict[tuple[Mode, Word], State] = {}
        self._pairs_open: set[tuple[str, str]] = set()
        self.used: set[str] = set()

    def _require(self, name: str, purpose: str):
        self.rules.require(name, purpose)
        self.used.add(name)

    def _tick(self, what: str):
        self.steps += 1
        if self.steps > self.config.rewrite_budget:
            raise InsufficientRulesError(
                f"rewrite budget of {self.config.rewrite_budget} steps exhausted at {what}"
            )

    # ------------------------------------------------------------------
    # Normalization
    # ------------------------------------------------------------------

    def normalize(self, state: State) -> State:
        return State.total(self.normalize_word(w).scale(c) for w, c in state.terms.items())

    def normalize_word(self, raw: Word) -> State:
        if self.swaps_left > 0 and len(raw.modes) >= 2 and self.rng.random() < 0.5:
            swapped = self._swap_adjacent(raw, self.rng.randrange(len(raw.modes) - 1))
            if swapped is not None:
                self.swaps_left -= 1
                return self.normalize(swapped)
        state = self.base_state(raw.base)
        for mode in reversed(raw.modes):
            state = self.apply_state(mode, state)
        return state

    def _swap_adjacent(self, raw: Word, i: int) -> State | None:
        """MN = NM + [M, N] at position i, when [M, N] is a plain mode combination."""
        first, second = raw.modes[i], raw.modes[i + 1]
        bracket = self.mode_bracket(first, second)
        if bracket is None:
            return None
        before, after = raw.modes[:i], raw.modes[i + 2:]
        terms = [State.of(Word(before + (second, first) + after, raw.base))]
        for coef, mode in bracket:
            middle = () if mode is None else (mode,)
            terms.append(State.of(Word(before + middle + after, raw.base), coef))
        return State.total(terms)

    def mode_bracket(self, first: Mode, second: Mode) -> list[tuple[sp.Expr, Mode | None]] | None:
        """[first, second] as (coefficient, mode) pairs, None standing for the identity."""
        m, n = first.index, second.index
        if first.is_virasoro and second.is_virasoro:
            self._require("R2", f"[{first}, {second}]")
            out = [(sp.Integer(m - n), Mode(VIRASORO, m + n))]
            if m + n == 0:
                out.append((sp.Rational(m**3 - m, 12) * CENTRAL_CHARGE, None))
            return out
        if first.is_virasoro and is_generator(second.field):
            self._require("R1", f"[{first}, {second}]")
            return [(sp.Integer(m - n + 1), Mode(second.field, m + n))]
        if second.is_virasoro and is_generator(first.field):
            self._require("R1", f"[{first}, {second}]")
            return [(sp.Integer(-(n - m + 1)), Mode(first.field, m + n))]
        return None

    def base_state(self, base: str) -> State:
        parsed = parse_opaque(base)
        if parsed is None:
            return State.bare(base)
        left, j, right = parsed
        return self.product(left, j, right)

    def apply_state(self, mode: Mode, state: State) -> State:
        return State.total(self.apply(mode, w).scale(c) for w, c in state.terms.items())

    def apply(self, mode: Mode, target: Word) -> State:
        key = (mode, target)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        self._tick(f"{mode} on {target}")
        weight = target.weight + mode.shift
        parsed = None if mode.is_virasoro else parse_opaque(mode.field)
        if weight < 0 or weight == 1:
            self._require("R4", "grading truncation")
            result = State.zero()
        elif weight > self.config.weight_cap:
            raise InsufficientRulesError(
                f"{mode} on {target} reaches weight {weight}, above the cap {self.config.weight_cap}"
            )
        elif mode == Mode(VIRASORO, 0):
            self._require("R4", "L(0) eigenvalue")
            result = State.of(target, target.weight)
        elif parsed is not None and parsed[1] == 0:
            result = self._expand_zero_product(parsed, mode.index, target)
        elif target.is_bare:
            result = self._on_base(mode, target.base)
        elif self._prepends(mode, target.head):
            result = State.of(target.prepend(mode))
        else:
            head, rest = target.head, target.tail()
            result = self.apply_state(head, self.apply(mode, rest)) + self.commutator(mode, head, rest)
        self._memo[key] = result
        return result

    def _sort_key(self, mode: Mode) -> tuple[int, int]:
        rank = generator_rank(mode.field) if is_generator(mode.field) else len(GENERATORS)
        return mode.index, rank

    def _prepends(self, mode: Mode, head: Mode) -> bool:
        if not mode.is_creation:
            return False
        if mode.is_virasoro:
            return not head.is_virasoro or mode.index <= head.index
        if head.is_virasoro:
            return False
        if not head.is_creation:
            return True
        if self._sort_key(mode) <= self._sort_key(head):
            return True
        return not self._products_known(mode.field, head.field)

    def _products_known(self, left: str, right: str) -> bool:
        if not (is_generator(left) and is_generator(right)):
            return False
        for j in (0, 1):
            value = self.product(left, j, right)
            if any(parse_opaque(w.base) for w in value.terms):
                return False
        return True

    # ------------------------------------------------------------------
    # Commutators
    # ------------------------------------------------------------------

    def commutator(self, outer: Mode, inner: Mode, rest: Word) -> State:
        """[outer, inner] applied to the normal word rest."""
        if outer.is_virasoro and inner.is_virasoro:
            self._require("R2", f"[{outer}, {inner}]")
            m, n = outer.index, inner.index
            out = self.apply(Mode(VIRASORO, m + n), rest).scale(m - n)
            if m + n == 0 and m**3 != m:
                out = out + State.of(rest, sp.Rational(m**3 - m, 12) * CENTRAL_CHARGE)
            return out
        if outer.is_virasoro:
            return self._virasoro_field_commutator(outer.index, inner, rest)
        if inner.is_virasoro:
            return -self._virasoro_field_commutator(inner.index, outer, rest)
        return self._field_commutator(outer, inner, rest)

    def _virasoro_field_commutator(self, m: int, mode: Mode, rest: Word) -> State:
        n = mode.index
        if is_generator(mode.field):
            self._require("R1", f"[L({m}), {mode}]")
            return self.apply(Mode(mode.field, m + n), rest).scale(m - n + 1)
        self._require("R3", f"[L({m}), {mode}]")
        # [L(m), O_n] = sum_j binom(m+1, j) (L(j-1) O)_(m+n+1-j)
        terms = []
        for j in range(field_weight(mode.field) + 2):
            coef = _binomial(m + 1, j)
            if coef == 0:
                continue
            image = self.apply(Mode(VIRASORO, j - 1), Word((), mode.field))
            terms.append(self.state_mode(image, m + n + 1 - j, rest).scale(coef))
        return State.total(terms)

    def _field_commutator(self, outer: Mode, inner: Mode, rest: Word) -> State:
        self._require("R3", f"[{outer}, {inner}]")
        a, n = outer.field, outer.index
        b, k = inner.field, inner.index
        terms = []
        for j in range(field_weight(a) + field_weight(b)):
            coef = _binomial(n, j)
            if coef == 0:
                continue
            terms.append(self.state_mode(self.product(a, j, b), n + k - j, rest).scale(coef))
        return State.total(terms)

    def state_mode(self, state: State, p: int, target: Word) -> State:
        """The p-th mode of the vertex operator of a normal state, acting on target."""
        return State.total(self._word_mode(w, p, target).scale(c) for w, c in state.terms.items())

    def _word_mode(self, w: Word, p: int, target: Word) -> State:
        if w.is_bare:
            if w.base == VACUUM:
                return State.of(target) if p == -1 else State.zero()
            return self.apply(Mode(w.base, p), target)
        if w.head == L_MINUS_ONE:
            return self._word_mode(w.tail(), p - 1, target).scale(-p)
        if w == OMEGA:
            return self.apply(Mode(VIRASORO, p - 1), target)
        raise InsufficientRulesError(f"no vertex-operator formula for the state {w}")

    def _expand_zero_product(self, parsed: tuple[str, int, str], p: int, target: Word) -> State:
        """(c_0 d)_p = c_0 d_p - d_p c_0 acting on target."""
        self._require("R3", f"mode {p} of {opaque_name(*parsed)}")
        c, _, d = parsed
        c0, dp = Mode(c, 0), Mode(d, p)
        return self.apply_state(c0, self.apply(dp, target)) - self.apply_state(dp, self.apply(c0, target))

    # ------------------------------------------------------------------
    # Products and base cases
    # ------------------------------------------------------------------

    def _on_base(self, mode: Mode, base: str) -> State:
        n = mode.index
        bare = Word((), base)
        if mode.is_virasoro:
            if n <= -1:
                return State.of(bare.prepend(mode))
            parsed = parse_opaque(base)
            if parsed is None:
                self._require("R4", f"{mode} on {base}")
                return State.zero()
            left, j, right = parsed
            self._require("R1", f"{mode} on {base}")
            return self.product(left, n + j, right).scale(n - j + 1)
        if base == VACUUM:
            self._require("R8", f"{mode} on the vacuum")
            if n >= 0:
                return State.zero()
            k = -n - 1
            state = State.bare(mode.field)
            for _ in range(k):
                state = self.apply_state(L_MINUS_ONE, state)
            return state.scale(sp.Rational(1, factorial(k)))
        if n >= 0:
            return self.product(mode.field, n, base)
        if is_generator(mode.field) and is_generator(base):
            return self.creation_product(mode.field, n, base)
        return State.of(bare.prepend(mode))

    def product(self, a: str, j: int, b: str) -> State:
        """a_j b for j >= 0 with a, b fields."""
        weight = field_weight(a) + field_weight(b) - j - 1
        if weight < 0 or weight == 1:
            self._require("R4", f"{a}_{j} {b} has weight {weight}")
            return State.zero()
        parsed = parse_opaque(a)
        if parsed is not None and parsed[1] == 0:
            return self._expand_zero_product(parsed, j, Word((), b))
        if weight == 0:
            return State.bare(VACUUM, self._unit_coefficient(a, j, b))
        if is_generator(a) and is_generator(b):
            return self.generator_product(a, j, b)
        if is_generator(a):
            return self.skew(a, j, b)
        return State.of(Word((Mode(a, j),), b))

    def _unit_coefficient(self, a: str, j: int, b: str) -> sp.Expr:
        if is_generator(a) and is_generator(b):
            self._require("R5", f"{a}_{j} {b}")
            return self.config.pairing(a, b)
        if field_weight(a) == 2:
            self._require("R9", f"{a}_{j} {b}")
            return self.pair(self.apply(Mode(a, 2 - j), Word()), State.bare(b))
        raise InsufficientRulesError(f"no rule evaluates {a}_{j} {b}")

    def generator_product(self, g: str, j: int, h: str) -> State:
        known = self.config.products.get((g, j, h))
        if known is not None:
            self._require("R5", f"{g}_{j} {h}")
            return known
        if g == h:
            if j == 0:
                self._require("R7", f"{g}_0 {g}")
                return self.apply_state(L_MINUS_ONE, self.generator_product(g, 1, g)).scale(
                    sp.Rational(1, 2)
                )
            return State.bare(opaque_name(g, j, h))
        if generator_rank(g) > generator_rank(h):
            return self.skew(g, j, h)
        return State.bare(opaque_name(g, j, h))

    def skew(self, a: str, j: int, b: str) -> State:
        """a_j b = sum_i (-1)^(j+i+1) L(-1)^i b_(j+i) a / i!"""
        self._require("R7", f"{a}_{j} {b} by skew symmetry")
        terms = []
        for i in range(field_weight(a) + field_weight(b) - j):
            inner = self._word_mode(Word((), b), j + i, Word((), a))
            for _ in range(i):
                inner = self.apply_state(L_MINUS_ONE, inner)
            terms.append(inner.scale(sp.Rational((-1) ** (j + i + 1), factorial(i))))
        return State.total(terms)

    def creation_product(self, g: str, n: int, h: str) -> State:
        if (g, n, h) in self.config.vanishing:
            self._require("H1", f"{g}_{n} {h} = 0")
            return State.zero()
        if g == h and n % 2 == 0:
            # g_n g = -g_n g + (terms with i >= 1) for even n
            self._require("R7", f"{g}_{n} {g}")
            terms = []
            for i in range(1, 4 - n):
                inner = self.apply(Mode(g, n + i), Word((), g))
                for _ in range(i):
                    inner = self.apply_state(L_MINUS_ONE, inner)
                terms.append(inner.scale(sp.Rational((-1) ** (n + i + 1), factorial(i))))
            return State.total(terms).scale(sp.Rational(1, 2))
        return State.of(Word((Mode(g, n),), h))

    # ------------------------------------------------------------------
    # Invariant form
    # ------------------------------------------------------------------

    def pair(self, left: State, right: State) -> sp.Expr:
        right = self.normalize(right)
        total = sp.Integer(0)
        for w, c in left.terms.items():
            total += c * self._pair_word(w, right)
        return sp.expand(total)

    def _pair_word(self, raw: Word, right: State) -> sp.Expr:
        total = sp.Integer(0)
        for w, c in right.terms.items():
            if w.weight == raw.weight:
                total += c * self._pair_words(raw, w)
        return total

    def _adjoint(self, mode: Mode) -> Mode:
        self._require("R9", f"adjoint of {mode}")
        if mode.is_virasoro:
            return Mode(VIRASORO, -mode.index)
        if field_weight(mode.field) != 2:
            raise InsufficientRulesError(f"{mode.field} is not a quasi-primary weight-2 field")
        return Mode(mode.field, 2 - mode.index)

    def _pair_words(self, raw: Word, normal: Word) -> sp.Expr:
        self._tick(f"({raw}, {normal})")
        if raw.modes:
            head, rest = raw.head, raw.tail()
            if parse_opaque(head.field) and rest.is_bare and is_generator(rest.base):
                return self._pair_raw(self._raw_skew(head, rest.base), State.of(normal))
            image = self.apply(self._adjoint(head), normal)
            return self._pair_word(rest, image)
        if normal.modes:
            return self._pair_words(normal, raw)
        return self._pair_bases(raw.base, normal.base)

    def _pair_raw(self, raw: State, right: State) -> sp.Expr:
        total = sp.Integer(0)
        for w, c in raw.terms.items():
            total += c * self._pair_word(w, right)
        return total

    def _raw_skew(self, mode: Mode, g: str) -> State:
        """O_n g as unevaluated words sum_i (-1)^(n+i+1) L(-1)^i g_(n+i) O / i!"""
        self._require("R7", f"{mode} {g} by skew symmetry")
        n = mode.index
        terms = {}
        for i in range(field_weight(mode.field) + field_weight(g) - n):
            modes = (L_MINUS_ONE,) * i + (Mode(g, n + i),)
            terms[Word(modes, mode.field)] = sp.Rational((-1) ** (n + i + 1), factorial(i))
        return State(terms)

    def _pair_bases(self, left: str, right: str) -> sp.Expr:
        self._require("R9", f"({left}, {right})")
        if left == VACUUM or right == VACUUM:
            return sp.Integer(1 if left == right else 0)
        key = _pair_key(left, right)
        for name, other in ((left, right), (right, left)):
            parsed = parse_opaque(name)
            if parsed is None:
                continue
            if key in self._pairs_open:
                # the form is not determined by the rules: keep it as an unknown
                return pairing_symbol(left, right)
            self._pairs_open.add(key)
            try:
                a, j, b = parsed
                return self._pair_word(Word((Mode(a, j),), b), State.bare(other))
            finally:
                self._pairs_open.discard(key)
        return self.config.pairing(left, right)
