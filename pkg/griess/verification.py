# griess/verification.py

"""
Replays the nilpotent-case argument with the rewriting engine: the quadratic
relations fix u_1 x and u_0 x, the invariant form fixes (u, u), a weight-4
highest-weight vector v is built and paired against u, the modes x_i v are
shown to vanish, and the fusion rules then rule the configuration out.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import sympy as sp

from exactlin.exceptions import SingularMatrixError
from exactlin.matrix import Matrix, solve
from virasoro.verma import exact_square_root
from zhu.fusion import fusion_dim_generic

from .algebra import (
    A,
    ALPHA,
    B,
    OMEGA,
    VIRASORO,
    Mode,
    State,
    Word,
    as_fraction,
    opaque_name,
    pairing_symbol,
    parse_opaque,
    word,
)
from .engine import EngineConfig, GriessEngine
from .exceptions import InconsistentSystemError

logger = logging.getLogger(__name__)
audit = logging.getLogger("audit")

CONTRADICTION = "contradiction-established"
INCONCLUSIVE = "inconclusive"

X, U = State.bare("x"), State.bare("u")
L_MINUS_ONE_X = word((VIRASORO, -1), base="x")

# Facts shared by every configuration of the nilpotent case.
_COMMON_PRODUCTS = {("x", 1, "x"): State.zero()}
_COMMON_PAIRINGS = {("x", "y"): 1, ("x", "u"): 0}
_COMMON_VANISHING = frozenset({("x", -1, "x")})


def pre_replacement_config() -> EngineConfig:
    """x_1 y = 4 omega + alpha x + u with (y, u) = 0."""
    return EngineConfig(
        name="pre-replacement",
        products={**_COMMON_PRODUCTS, ("x", 1, "y"): State.of(OMEGA, 4) + X.scale(ALPHA) + U},
        pairings={**_COMMON_PAIRINGS, ("y", "u"): 0},
        vanishing=_COMMON_VANISHING,
    )


def post_replacement_config() -> EngineConfig:
    """After y -> y + (alpha / 10) u: x_1 y = 4 omega + u, (y, u) and (y, y) unknown."""
    return EngineConfig(
        name="post-replacement",
        products={**_COMMON_PRODUCTS, ("x", 1, "y"): State.of(OMEGA, 4) + U},
        pairings=_COMMON_PAIRINGS,
        vanishing=_COMMON_VANISHING,
    )


# ==============================================================================
# Derived facts
# ==============================================================================

@dataclass(frozen=True)
class DerivedFact:
    name: str
    statement: str
    value: object
    rules: tuple[str, ...]


@dataclass(frozen=True)
class FactLedger:
    facts: tuple[DerivedFact, ...]
    products: dict
    pairings: dict

    def get(self, name: str) -> DerivedFact:
        for fact in self.facts:
            if fact.name == name:
                return fact
        raise KeyError(name)

    def render(self) -> str:
        return "\n".join(
            f"{f.name}: {f.statement}  [{', '.join(f.rules)}]" for f in self.facts
        ) + "\n"


def quadratic_relation_one() -> State:
    """x_1 x_1 y + 2 sum_(i>=1) x_(1-i) x_(1+i) y, a coefficient of Y(x, z)^2 y = 0."""
    terms = {word(("x", 1), ("x", 1), base="y"): 1}
    for i in range(1, 4):
        terms[word(("x", 1 - i), ("x", 1 + i), base="y")] = 2
    return State(terms)


def quadratic_relation_two() -> State:
    """sum_(i>=0) x_(-i) x_(i+1) y."""
    return State({word(("x", -i), ("x", i + 1), base="y"): 1 for i in range(4)})


def _solve_for_opaque(relation: State, name: str) -> State:
    unknown = Word((), name)
    coefficient = relation.coefficient(unknown)
    if coefficient == 0 or coefficient.free_symbols:
        raise InconsistentSystemError(f"relation {relation} does not isolate {name}")
    rest = relation - State.of(unknown, coefficient)
    if rest.free_symbols or any(parse_opaque(w.base) for w in rest.terms):
        raise InconsistentSystemError(f"relation {relation} leaves unknowns beside {name}")
    return rest.scale(-1 / coefficient)


def _normalized(engine: GriessEngine, state: State) -> tuple[State, tuple[str, ...]]:
    session = engine.session()
    result = session.normalize(state)
    return result, tuple(sorted(session.used))


def derive_facts() -> FactLedger:
    """The u-products and the norms (x, x), (u, u) derived from the cited rules alone."""
    facts: list[DerivedFact] = []
    config = pre_replacement_config()
    config.rules.require("R6", "quadratic relations of x_-1 x = 0")

    relation, used = _normalized(GriessEngine(config), quadratic_relation_one())
    x1u = _solve_for_opaque(relation, opaque_name("x", 1, "u"))
    facts.append(DerivedFact("x_1 u", f"{relation} = 0 gives x_1 u = {x1u}", x1u, ("R6",) + used))
    config = config.with_facts(products={("x", 1, "u"): x1u})

    relation, used = _normalized(GriessEngine(config), quadratic_relation_two())
    x0u = _solve_for_opaque(relation, opaque_name("x", 0, "u"))
    facts.append(DerivedFact("x_0 u", f"{relation} = 0 gives x_0 u = {x0u}", x0u, ("R6",) + used))
    config = config.with_facts(products={("x", 0, "u"): x0u})
    engine = GriessEngine(config)

    for name, raw in (
        ("u_1 x", word(("u", 1), base="x")),
        ("u_0 x", word(("u", 0), base="x")),
        ("x_0 x", word(("x", 0), base="x")),
        ("x_-2 x", word(("x", -2), base="x")),
    ):
        value, used = _normalized(engine, State.of(raw))
        facts.append(DerivedFact(name, f"{raw} = {value}", value, used))

    half_x1_omega = State.of(word(("x", 1), (VIRASORO, -2)), sp.Rational(1, 2))
    if engine.normalize(half_x1_omega) != X:
        raise InconsistentSystemError("x_1 omega / 2 does not reproduce x")
    norm_x = engine.pair(half_x1_omega, X)
    facts.append(DerivedFact("(x, x)", f"(x_1 omega / 2, x) = (omega / 2, x_1 x) = {norm_x}", norm_x, ("R1", "R5", "R9")))

    post = post_replacement_config().with_facts(
        products={("x", 1, "u"): x1u, ("x", 0, "u"): x0u}, pairings={("x", "x"): norm_x}
    )
    engine = GriessEngine(post)
    x1y = State.of(word(("x", 1), base="y"))
    adjoint_side = engine.pair(x1y, x1y)
    normal_side = engine.pair(engine.normalize(x1y), x1y)
    norm_symbol = pairing_symbol("u", "u")
    solutions = sp.solve(sp.Eq(adjoint_side, normal_side), norm_symbol)
    if len(solutions) != 1:
        raise InconsistentSystemError(f"({adjoint_side}) = ({normal_side}) does not fix (u, u)")
    norm_u = solutions[0]
    facts.append(
        DerivedFact(
            "(u, u)",
            f"(x_1 y, x_1 y) = {adjoint_side} and (4 omega + u, 4 omega + u) = {normal_side}",
            norm_u,
            ("R1", "R2", "R5", "R9"),
        )
    )
    for fact in facts:
        logger.info(f"derived {fact.name}: {fact.value}")
    return FactLedger(
        tuple(facts),
        products={("x", 1, "u"): x1u, ("x", 0, "u"): x0u},
        pairings={("x", "x"): norm_x, ("u", "u"): norm_u},
    )


def assumed_facts() -> FactLedger:
    """The same facts asserted as axioms rather than derived."""
    x1u = X.scale(-10)
    x0u = State.of(L_MINUS_ONE_X, -5)
    return FactLedger(
        facts=(),
        products={("x", 1, "u"): x1u, ("x", 0, "u"): x0u},
        pairings={("x", "x"): 0, ("u", "u"): -10},
    )


@lru_cache(maxsize=None)
def _cached_ledger(assume: bool) -> FactLedger:
    return assumed_facts() if assume else derive_facts()


def nilpotent_config(assume: bool = False, weight_cap: int = 6) -> EngineConfig:
    ledger = _cached_ledger(assume)
    return post_replacement_config().with_facts(
        name="nilpotent-assumed" if assume else "nilpotent-derived",
        products=ledger.products,
        pairings=ledger.pairings,
        weight_cap=weight_cap,
    )


def nilpotent_engine(assume: bool = False) -> GriessEngine:
    return GriessEngine(nilpotent_config(assume))


# ==============================================================================
# The weight-4 highest-weight vector
# ==============================================================================

def highest_weight_candidate(a=A, b=B) -> State:
    """v = u_-1 x + a x_-3 1 + b L(-2) x"""
    return State(
        {
            word(("u", -1), base="x"): 1,
            word(("x", -3)): a,
            word((VIRASORO, -2), base="x"): b,
        }
    )


@dataclass(frozen=True)
class HighestWeightSystem:
    l1_coefficient: sp.Expr
    l2_coefficient: sp.Expr
    solution: tuple[Fraction, Fraction]


def _single_coefficient(state: State, target: Word, label: str) -> sp.Expr:
    extra = [w for w in state.terms if w != target]
    if extra:
        raise InconsistentSystemError(f"{label} has terms outside {target}: {state}")
    coefficient = state.coefficient(target)
    if sp.Poly(coefficient, A, B).total_degree() > 1 or coefficient.free_symbols - {A, B}:
        raise InconsistentSystemError(f"{label} coefficient {coefficient} is not linear in a, b")
    return coefficient


def highest_weight_system(engine: GriessEngine | None = None) -> HighestWeightSystem:
    engine = engine or nilpotent_engine()
    v = highest_weight_candidate()
    l1 = _single_coefficient(engine.apply(Mode(VIRASORO, 1), v), L_MINUS_ONE_X, "L(1) v")
    l2 = _single_coefficient(engine.apply(Mode(VIRASORO, 2), v), Word((), "x"), "L(2) v")
    rows, rhs = [], []
    for coefficient in (l1, l2):
        rows.append([as_fraction(coefficient.coeff(A)), as_fraction(coefficient.coeff(B))])
        rhs.append(-as_fraction(coefficient.subs({A: 0, B: 0})))
    try:
        a, b = solve(Matrix.from_rows(rows), rhs)
    except SingularMatrixError as exc:
        raise InconsistentSystemError(f"L(1) v = 0, L(2) v = 0 does not fix a, b: {exc}") from exc
    logger.info(f"L(1) v = ({l1}) L(-1) x, L(2) v = ({l2}) x: a = {a}, b = {b}")
    return HighestWeightSystem(l1, l2, (a, b))


def solve_hw_coefficients(engine: GriessEngine | None = None) -> tuple[Fraction, Fraction]:
    return highest_weight_system(engine).solution


def solved_candidate(engine: GriessEngine | None = None) -> State:
    a, b = solve_hw_coefficients(engine)
    return highest_weight_candidate(
        sp.Rational(a.numerator, a.denominator), sp.Rational(b.numerator, b.denominator)
    )


def pair_y3v_u(engine: GriessEngine | None = None, symbolic_norm: bool = False):
    """
    (y_3 v, u) for the solved v. Every unknown pairing must cancel; with
    symbolic_norm the value is returned with (u, u) left as an unknown.
    """
    engine = engine or nilpotent_engine()
    v = solved_candidate(engine)
    if symbolic_norm:
        pairings = {k: val for k, val in engine.config.pairings.items() if k != ("u", "u")}
        engine = GriessEngine(
            replace(engine.config, name=f"{engine.config.name}-symbolic-norm", pairings=pairings)
        )
    y3v = engine.apply(Mode("y", 3), v)
    value = engine.pair(y3v, U)
    logger.info(f"y_3 v = {y3v}; (y_3 v, u) = {value}")
    if symbolic_norm:
        return value
    return as_fraction(value)


def annihilation_images(i_max: int, engine: GriessEngine | None = None) -> dict[int, State]:
    if i_max < 0:
        raise ValueError("i_max must be >= 0")
    engine = engine or nilpotent_engine()
    v = solved_candidate(engine)
    return {i: engine.apply(Mode("x", i), v) for i in range(i_max + 1)}


def check_xiv_zero(i_max: int, engine: GriessEngine | None = None) -> bool:
    images = annihilation_images(i_max, engine)
    for i, image in images.items():
        if not image.is_zero():
            logger.warning(f"x_{i} v = {image}")
            return False
    return True


# ==============================================================================
# Closing argument
# ==============================================================================

@dataclass(frozen=True)
class ReportStep:
    claim: str
    value: str
    holds: bool


@dataclass(frozen=True)
class ContradictionReport:
    steps: tuple[ReportStep, ...]
    verdict: str


def conformal_weight(engine: GriessEngine, state: State) -> Fraction:
    """The eigenvalue of L(0) on a nonzero homogeneous state, read off the engine."""
    normal = engine.normalize(state)
    if normal.is_zero():
        raise InconsistentSystemError("the zero state has no conformal weight")
    image = engine.apply(Mode(VIRASORO, 0), normal)
    w, coefficient = next(iter(normal.terms.items()))
    weight = sp.simplify(image.coefficient(w) / coefficient)
    if image != normal.scale(weight):
        raise InconsistentSystemError(f"{state} is not an L(0) eigenvector")
    return as_fraction(weight)


def contradiction_report(fusion_range: range = range(1, 11), engine: GriessEngine | None = None) -> ContradictionReport:
    engine = engine or nilpotent_engine()
    a, b = solve_hw_coefficients(engine)
    v = solved_candidate(engine)
    raising = [engine.apply(Mode(VIRASORO, n), v) for n in (1, 2)]
    steps = [
        ReportStep(
            "v = u_-1 x + a x_-3 1 + b L(-2) x is a Virasoro highest-weight vector",
            f"a = {a}, b = {b}; L(1) v = {raising[0]}, L(2) v = {raising[1]}",
            all(image.is_zero() for image in raising),
        )
    ]
    norm = pair_y3v_u(engine)
    steps.append(ReportStep("v is nonzero: (y_3 v, u) != 0", str(norm), norm != 0))
    x_weight, v_weight = conformal_weight(engine, X), conformal_weight(engine, v)
    root = exact_square_root(v_weight)
    generic = x_weight.denominator == 1 and exact_square_root(x_weight) is None
    steps.append(
        ReportStep(
            f"x generates L(1, {x_weight}) and v generates L(1, {v_weight})",
            f"L(0) x = {x_weight} x, L(0) v = {v_weight} v",
            generic and root is not None,
        )
    )
    if steps[-1].holds:
        n = x_weight.numerator
        for t in fusion_range:
            k = t + v_weight.numerator + 1
            dim = fusion_dim_generic(root, n, k)
            steps.append(
                ReportStep(
                    f"no intertwining operator of type (L(1, {k}); L(1, {v_weight}), L(1, {n}))",
                    f"fusion = {dim}",
                    dim == 0,
                )
            )
    verdict = CONTRADICTION if all(step.holds for step in steps) else INCONCLUSIVE
    for step in steps:
        audit.info(f"{'OK  ' if step.holds else 'FAIL'} {step.claim}: {step.value}")
    audit.info(f"nilpotent case: {verdict}")
    return ContradictionReport(tuple(steps), verdict)


# ==============================================================================
# Confluence
# ==============================================================================

@dataclass(frozen=True)
class ConfluenceReport:
    samples: int
    mismatches: tuple[tuple[str, str, str], ...]

    @property
    def holds(self) -> bool:
        return not self.mismatches


def _random_word(rng: random.Random, max_modes: int) -> Word | None:
    modes = []
    for _ in range(rng.randint(1, max_modes)):
        if rng.random() < 0.5:
            modes.append(Mode(VIRASORO, rng.randint(-3, 2)))
        else:
            modes.append(Mode("x", rng.randint(-3, 3)))
    raw = Word(tuple(modes), rng.choice(("1", "x")))
    for k in range(len(raw.modes) + 1):
        if Word(raw.modes[k:], raw.base).weight > 6:
            return None
    return raw


def confluence_check(samples: int = 25, seed: int = 0, max_modes: int = 3, assume: bool = False) -> ConfluenceReport:
    """Normalizes random words directly and along randomly pre-swapped schedules."""
    engine = GriessEngine(nilpotent_config(assume, weight_cap=8))
    rng = random.Random(seed)
    mismatches = []
    tested = 0
    while tested < samples:
        raw = _random_word(rng, max_modes)
        if raw is None:
            continue
        tested += 1
        direct = engine.normalize(State.of(raw))
        scheduled = engine.normalize(State.of(raw), rng=random.Random(rng.random()))
        if direct != scheduled:
            mismatches.append((str(raw), str(direct), str(scheduled)))
    if mismatches:
        logger.warning(f"confluence failed on {len(mismatches)} of {samples} words")
    return ConfluenceReport(samples, tuple(mismatches))



# ==============================================================================
# Named checks
# ==============================================================================

CHECK_STEPS = ("u-products", "u-norm", "hw-vector", "annihilation")


@dataclass(frozen=True)
class Check:
    name: str
    value: str
    expected: str
    ok: bool


def _check(name: str, value, expected) -> Check:
    return Check(name, str(value), str(expected), value == expected)


def _u_product_checks(engine: GriessEngine) -> list[Check]:
    ledger = _cached_ledger(False)
    relation = GriessEngine(pre_replacement_config()).normalize(quadratic_relation_one())
    checks = [
        _check(
            "x_1 x_1 y + 2 sum x_(1-i) x_(1+i) y",
            relation,
            X.scale(10) + State.bare(opaque_name("x", 1, "u")),
        )
    ]
    expected = {
        "x_1 u": X.scale(-10),
        "x_0 u": State.of(L_MINUS_ONE_X, -5),
        "u_1 x": X.scale(-10),
        "u_0 x": State.of(L_MINUS_ONE_X, -5),
    }
    for name, value in expected.items():
        checks.append(_check(name, ledger.get(name).value, value))
    for index in (1, 0):
        name = f"u_{index} x"
        value = engine.normalize(State.of(word(("u", index), base="x")))
        checks.append(_check(f"{name} in {engine.config.name}", value, expected[name]))
    return checks


def _u_norm_checks(engine: GriessEngine) -> list[Check]:
    x1y = State.of(word(("x", 1), base="y"))
    return [
        _check("(x_1 y, x_1 y)", engine.pair(x1y, x1y), -2),
        _check("(u, u)", engine.pair(U, U), -10),
        _check("(u, u) derived", _cached_ledger(False).get("(u, u)").value, -10),
    ]


def _hw_vector_checks(engine: GriessEngine) -> list[Check]:
    system = highest_weight_system(engine)
    a, b = system.solution
    return [
        _check("L(1) v coefficient of L(-1) x", system.l1_coefficient, sp.expand(-15 + 5 * A + 3 * B)),
        _check("L(2) v coefficient of x", system.l2_coefficient, sp.expand(-40 + 6 * A + sp.Rational(17, 2) * B)),
        _check("a", a, Fraction(15, 49)),
        _check("b", b, Fraction(220, 49)),
        _check("(y_3 v, u)", pair_y3v_u(engine), Fraction(60, 49)),
    ]


def _annihilation_checks(engine: GriessEngine, i_max: int = 6) -> list[Check]:
    return [_check(f"x_{i} v", image, State.zero()) for i, image in annihilation_images(i_max, engine).items()]


_STEP_CHECKS = {
    "u-products": _u_product_checks,
    "u-norm": _u_norm_checks,
    "hw-vector": _hw_vector_checks,
    "annihilation": _annihilation_checks,
}


def run_checks(step: str, engine: GriessEngine | None = None) -> list[Check]:
    if step not in _STEP_CHECKS:
        raise ValueError(f"unknown step {step!r}; expected one of {', '.join(CHECK_STEPS)}")
    engine = engine or nilpotent_engine()
    checks = _STEP_CHECKS[step](engine)
    for check in checks:
        audit.info(f"{'OK    ' if check.ok else 'FAILED'} [{step}] {check.name} = {check.value}")
    return checks
