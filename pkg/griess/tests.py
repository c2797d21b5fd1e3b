import random
from dataclasses import replace
from fractions import Fraction

import sympy as sp
from django.test import SimpleTestCase

from .algebra import A, B, OMEGA, VIRASORO, Mode, State, as_fraction, opaque_name, pairing_symbol, word
from .engine import GriessEngine
from .exceptions import InconsistentSystemError, InsufficientRulesError, UncitedRuleError
from .rules import STANDARD_RULES, Rule, RuleSet
from .verification import (
    CONTRADICTION,
    annihilation_images,
    check_xiv_zero,
    conformal_weight,
    confluence_check,
    contradiction_report,
    derive_facts,
    highest_weight_system,
    nilpotent_engine,
    pair_y3v_u,
    pre_replacement_config,
    quadratic_relation_one,
    quadratic_relation_two,
    solve_hw_coefficients,
    solved_candidate,
)

X = State.bare("x")
Y = State.bare("y")
U = State.bare("u")
L_1_X = word((VIRASORO, -1), base="x")


def raw(*modes, base="1", coefficient=1):
    return State.of(word(*modes, base=base), coefficient)


class EngineTests(SimpleTestCase):
    def setUp(self):
        self.engine = nilpotent_engine()

    def test_highest_weight_generators(self):
        self.assertTrue(self.engine.normalize(raw((VIRASORO, 1), base="x")).is_zero())
        self.assertTrue(self.engine.normalize(raw((VIRASORO, 2), base="x")).is_zero())
        self.assertEqual(self.engine.normalize(raw((VIRASORO, 0), base="x")), X.scale(2))

    def test_u_products(self):
        self.assertEqual(self.engine.normalize(raw(("u", 1), base="x")), X.scale(-10))
        self.assertEqual(self.engine.normalize(raw(("u", 0), base="x")), State.of(L_1_X, -5))
        # u_0 x = -5 x_-2 1
        self.assertEqual(self.engine.normalize(raw(("x", -2))), State.of(L_1_X))

    def test_vacuum_creation(self):
        self.assertEqual(
            self.engine.normalize(raw(("x", -3))),
            State.of(word((VIRASORO, -1), (VIRASORO, -1), base="x"), sp.Rational(1, 2)),
        )
        self.assertTrue(self.engine.normalize(raw(("x", 0))).is_zero())

    def test_grading_truncation(self):
        self.assertTrue(self.engine.normalize(raw(("x", 2), base="y")).is_zero())
        self.assertEqual(self.engine.normalize(raw(("x", 3), base="y")), State.bare("1"))

    def test_nilpotent_square(self):
        self.assertTrue(self.engine.normalize(raw(("x", -1), base="x")).is_zero())
        self.assertTrue(self.engine.normalize(raw(("x", -2), base="x")).is_zero())
        self.assertTrue(self.engine.normalize(raw(("x", 0), base="x")).is_zero())

    def test_virasoro_bracket(self):
        value = self.engine.normalize(raw((VIRASORO, 2), (VIRASORO, -2)))
        self.assertEqual(value, State.bare("1", sp.Rational(1, 2)))

    def test_pairings(self):
        self.assertEqual(self.engine.pair(X, Y), 1)
        self.assertEqual(self.engine.pair(State.of(OMEGA), State.of(OMEGA)), sp.Rational(1, 2))
        self.assertEqual(self.engine.pair(State.of(OMEGA), X), 0)
        x1y = raw(("x", 1), base="y")
        self.assertEqual(self.engine.pair(x1y, x1y), -2)
        self.assertEqual(self.engine.pair(U, U), -10)
        self.assertEqual(self.engine.pair(X, State.of(OMEGA).scale(3)), 0)

    def test_unknown_pairings_stay_symbolic(self):
        self.assertEqual(self.engine.pair(Y, U), pairing_symbol("u", "y"))
        self.assertEqual(self.engine.pair(Y, Y), pairing_symbol("y", "y"))

    def test_unequal_weights_pair_to_zero(self):
        self.assertEqual(self.engine.pair(X, State.of(L_1_X)), 0)

    def test_adjunction(self):
        states = [
            State.bare("1"),
            X,
            State.of(OMEGA),
            State.of(L_1_X),
            raw((VIRASORO, -2), base="x"),
            raw((VIRASORO, -1), (VIRASORO, -1), base="x"),
            raw((VIRASORO, -3)),
            raw((VIRASORO, -2), (VIRASORO, -2)),
            raw((VIRASORO, -1), base="x", coefficient=3) + raw((VIRASORO, -3)),
        ]
        rng = random.Random(7)
        checked = 0
        while checked < 25:
            g = rng.choice(("x", "u"))
            s, t = rng.choice(states), rng.choice(states)
            n = min(s.weights()) - min(t.weights())
            left = self.engine.pair(self.engine.apply(Mode(g, n + 1), s), t)
            right = self.engine.pair(s, self.engine.apply(Mode(g, 1 - n), t))
            self.assertEqual(sp.expand(left - right), 0, f"{g}_{n + 1}: ({s}, {t})")
            checked += 1

    def test_missing_rule(self):
        engine = GriessEngine(replace(self.engine.config, rules=STANDARD_RULES.without("R7")))
        with self.assertRaises(InsufficientRulesError):
            engine.normalize(raw(("u", 1), base="x"))

    def test_rewrite_budget(self):
        engine = GriessEngine(replace(self.engine.config, rewrite_budget=3))
        with self.assertRaises(InsufficientRulesError):
            engine.normalize(solved_candidate())

    def test_weight_cap(self):
        with self.assertRaises(InsufficientRulesError):
            self.engine.normalize(raw((VIRASORO, -4), (VIRASORO, -3), base="x"))


class DerivationTests(SimpleTestCase):
    def test_first_quadratic_relation(self):
        engine = GriessEngine(pre_replacement_config())
        expected = X.scale(10) + State.bare(opaque_name("x", 1, "u"))
        self.assertEqual(engine.normalize(quadratic_relation_one()), expected)

    def test_second_quadratic_relation(self):
        config = pre_replacement_config().with_facts(products={("x", 1, "u"): X.scale(-10)})
        expected = State.of(L_1_X, 5) + State.bare(opaque_name("x", 0, "u"))
        self.assertEqual(GriessEngine(config).normalize(quadratic_relation_two()), expected)

    def test_ledger(self):
        ledger = derive_facts()
        self.assertEqual(ledger.get("x_1 u").value, X.scale(-10))
        self.assertEqual(ledger.get("u_1 x").value, X.scale(-10))
        self.assertEqual(ledger.get("u_0 x").value, State.of(L_1_X, -5))
        self.assertTrue(ledger.get("x_0 x").value.is_zero())
        self.assertTrue(ledger.get("x_-2 x").value.is_zero())
        self.assertEqual(ledger.get("(x, x)").value, 0)
        self.assertEqual(ledger.get("(u, u)").value, -10)
        self.assertIn("R6", ledger.get("x_1 u").rules)
        self.assertIn("R7", ledger.get("u_1 x").rules)
        self.assertIn("u_1 x", ledger.render())

    def test_derived_and_assumed_agree(self):
        derived, assumed = nilpotent_engine(), nilpotent_engine(assume=True)
        self.assertEqual(solve_hw_coefficients(derived), solve_hw_coefficients(assumed))
        self.assertEqual(pair_y3v_u(derived), pair_y3v_u(assumed))
        self.assertEqual(check_xiv_zero(6, derived), check_xiv_zero(6, assumed))


class HighestWeightTests(SimpleTestCase):
    def test_linear_system(self):
        system = highest_weight_system()
        self.assertEqual(sp.expand(system.l1_coefficient - (-15 + 5 * A + 3 * B)), 0)
        self.assertEqual(
            sp.expand(system.l2_coefficient - (-40 + 6 * A + sp.Rational(17, 2) * B)), 0
        )
        self.assertEqual(system.solution, (Fraction(15, 49), Fraction(220, 49)))

    def test_solved_vector_is_highest_weight(self):
        engine = nilpotent_engine()
        v = solved_candidate(engine)
        for n in (1, 2, 3, 4):
            self.assertTrue(engine.apply(Mode(VIRASORO, n), v).is_zero())
        self.assertEqual(engine.apply(Mode(VIRASORO, 0), v), engine.normalize(v).scale(4))

    def test_norm_pairing(self):
        self.assertEqual(pair_y3v_u(), Fraction(60, 49))

    def test_norm_pairing_with_symbolic_u_norm(self):
        value = pair_y3v_u(symbolic_norm=True)
        norm = pairing_symbol("u", "u")
        self.assertEqual(sp.expand(value - (100 + sp.Rational(484, 49) * norm)), 0)
        self.assertEqual(value.subs(norm, -10), sp.Rational(60, 49))

    def test_unsolved_vector_is_not_evaluated(self):
        with self.assertRaises(InsufficientRulesError):
            as_fraction(A + 1)

    def test_x_modes_annihilate(self):
        self.assertTrue(check_xiv_zero(6))
        images = annihilation_images(2)
        self.assertEqual(sorted(images), [0, 1, 2])
        self.assertTrue(all(image.is_zero() for image in images.values()))


class RuleSetTests(SimpleTestCase):
    def test_uncited_rule_refused(self):
        with self.assertRaises(UncitedRuleError):
            RuleSet((Rule("R99", "", "no source"),))
        with self.assertRaises(UncitedRuleError):
            STANDARD_RULES.extended(Rule("R99", "   ", "no source"))

    def test_duplicate_rule_refused(self):
        with self.assertRaises(ValueError):
            STANDARD_RULES.extended(STANDARD_RULES.get("R1"))

    def test_dump(self):
        dump = STANDARD_RULES.dump()
        self.assertEqual(len(dump.splitlines()), len(STANDARD_RULES))
        self.assertIn("R7", dump)
        self.assertIn("skew symmetry", dump)

    def test_require(self):
        with self.assertRaises(InsufficientRulesError):
            STANDARD_RULES.without("R9").require("R9", "adjunction")


class ConfluenceTests(SimpleTestCase):
    def test_random_schedules(self):
        report = confluence_check(samples=15, seed=3)
        self.assertEqual(report.mismatches, ())
        self.assertTrue(report.holds)


class ContradictionTests(SimpleTestCase):
    def test_report(self):
        with self.assertLogs("audit", "INFO") as logs:
            report = contradiction_report()
        self.assertEqual(report.verdict, CONTRADICTION)
        self.assertEqual(report.steps[1].value, "60/49")
        fusion_steps = [s for s in report.steps if s.claim.startswith("no intertwining")]
        self.assertEqual(len(fusion_steps), 10)
        self.assertIn("L(1, 6)", fusion_steps[0].claim)
        self.assertTrue(any(CONTRADICTION in line for line in logs.output))

    def test_steps_read_off_the_engine(self):
        report = contradiction_report(range(1, 2))
        self.assertTrue(report.steps[0].holds)
        self.assertIn("L(1) v = 0, L(2) v = 0", report.steps[0].value)
        self.assertEqual(report.steps[2].claim, "x generates L(1, 2) and v generates L(1, 4)")
        self.assertEqual(report.steps[2].value, "L(0) x = 2 x, L(0) v = 4 v")

    def test_conformal_weights(self):
        engine = nilpotent_engine()
        self.assertEqual(conformal_weight(engine, X), 2)
        self.assertEqual(conformal_weight(engine, solved_candidate(engine)), 4)
        self.assertEqual(conformal_weight(engine, State.of(L_1_X)), 3)
        with self.assertRaises(InconsistentSystemError):
            conformal_weight(engine, State.zero())
        with self.assertRaises(InconsistentSystemError):
            conformal_weight(engine, X + State.of(L_1_X))
