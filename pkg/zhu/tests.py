import random
from fractions import Fraction

from django.test import SimpleTestCase

from virasoro.verma import ModuleElement, VermaParams, apply_mode, partitions

from .bipoly import BiPolynomial
from .exceptions import ParamsMismatchError, PreconditionError
from .fusion import (
    contracted_generator,
    contracted_roots,
    fusion_dim_generic,
    fusion_dim_nonsquare_pair,
    fusion_dim_squares,
    fusion_table,
)
from .generators import (
    closed_form_generator,
    generator_by_vandermonde,
    generator_from_singular_vector,
    normalized_by_vandermonde,
    normalized_from_singular_vector,
)
from .reduction import ZhuReducer, reduce_to_bipoly

X = BiPolynomial.x()
Y = BiPolynomial.y()


def random_element(rng, params, level):
    basis = partitions(level)
    terms = {p: Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for p in rng.sample(basis, min(3, len(basis)))}
    return ModuleElement(params, terms, level)


class BiPolynomialTests(SimpleTestCase):
    def test_no_zero_coefficients(self):
        p = BiPolynomial({(1, 0): 1, (0, 1): 0})
        self.assertEqual(p.coefficients, {(1, 0): 1})

    def test_arithmetic(self):
        self.assertEqual((X + Y) * (X - Y), X * X - Y * Y)
        self.assertEqual((X - 1) ** 2, X * X - X.scale(2) + 1)

    def test_rendering(self):
        self.assertEqual(str(X * X - Y.scale(Fraction(1, 2)) + 3), "x^2 - 1/2*y + 3")
        self.assertEqual(str(BiPolynomial()), "0")


class ReductionTests(SimpleTestCase):
    def setUp(self):
        self.h = Fraction(3, 7)
        self.params = VermaParams(1, self.h)
        self.reducer = ZhuReducer(self.params)

    def test_vacuum(self):
        self.assertEqual(self.reducer.reduce_word(()), 1)

    def test_right_action(self):
        # (L(-2) + L(-1)) v mixes levels, so reduce the two pieces separately
        pieces = [ModuleElement.basis_vector(self.params, (2,)),
                  ModuleElement.basis_vector(self.params, (1,))]
        self.assertEqual(sum((self.reducer.reduce(p) for p in pieces), BiPolynomial()), Y)

    def test_single_modes(self):
        self.assertEqual(self.reducer.reduce_word((1,)), X - Y - self.h)
        self.assertEqual(self.reducer.reduce_word((3,)), X - Y.scale(3) - self.h)

    def test_unordered_words_agree_with_pbw(self):
        # L(-1) L(-2) v = L(-2) L(-1) v + L(-3) v
        self.assertEqual(
            self.reducer.reduce_word((1, 2)),
            self.reducer.reduce_word((2, 1)) + self.reducer.reduce_word((3,)),
        )

    def test_params_mismatch(self):
        other = ModuleElement.highest_weight(VermaParams(1, 2))
        with self.assertRaises(ParamsMismatchError):
            self.reducer.reduce(other)

    def test_trace_replays(self):
        rng = random.Random(17)
        for level in range(5):
            e = random_element(rng, self.params, level)
            trace = self.reducer.trace(e)
            self.assertEqual(trace.replay(), trace.output)
            self.assertEqual(trace.output, reduce_to_bipoly(e))

    def test_bimodule_identities(self):
        rng = random.Random(2024)
        for _ in range(100):
            h = Fraction(rng.randint(-6, 12), rng.randint(1, 4))
            params = VermaParams(1, h)
            reducer = ZhuReducer(params)
            level = rng.randint(0, 4)
            w = random_element(rng, params, level)
            image = reducer.reduce(w)

            # L(-2) w and L(-1) w sit at different levels, so reduce them apart
            second = reducer.reduce(apply_mode(-2, w))
            first = reducer.reduce(apply_mode(-1, w))
            self.assertEqual(second + first.scale(2) + image.scale(h + level), X * image)
            self.assertEqual(second + first, image * Y)

    def test_linearity(self):
        rng = random.Random(99)
        for _ in range(100):
            level = rng.randint(0, 4)
            e1 = random_element(rng, self.params, level)
            e2 = random_element(rng, self.params, level)
            a, b = Fraction(rng.randint(-5, 5), 3), Fraction(rng.randint(-5, 5), 2)
            self.assertEqual(
                self.reducer.reduce(e1.scale(a) + e2.scale(b)),
                self.reducer.reduce(e1).scale(a) + self.reducer.reduce(e2).scale(b),
            )


class GeneratorTests(SimpleTestCase):
    def test_closed_form_r1(self):
        d = X - Y
        self.assertEqual(closed_form_generator(1), d * (d * d - (X + Y).scale(2) + 1))
        self.assertEqual(closed_form_generator(1).evaluate(1, 4), 0)
        self.assertEqual(closed_form_generator(1).evaluate(9, 1), 360)

    def test_degree_and_normalization(self):
        for r in (1, 2, 3):
            f = closed_form_generator(r)
            self.assertEqual(f.degree, 2 * r + 1)
            self.assertEqual(f.coefficient(2 * r + 1, 0), 1)
            self.assertEqual(f.coefficient(0, 2 * r + 1), -1)

    def test_antisymmetry(self):
        for r in (1, 2, 3):
            f = closed_form_generator(r)
            self.assertEqual(f.swap(), -f)

    def test_singular_vector_route(self):
        for r in (1, 2):
            self.assertEqual(generator_from_singular_vector(r), closed_form_generator(r))
        # the level-3 singular vector of V(1, 1) reduces to f/2
        self.assertEqual(normalized_from_singular_vector(1).scalar, 2)

    def test_vandermonde_route(self):
        for r in (1, 2, 3):
            self.assertEqual(generator_by_vandermonde(r), closed_form_generator(r))
        self.assertEqual(normalized_by_vandermonde(2).scalar, -1)

    def test_zero_locus(self):
        for r in (1, 2, 3):
            f = closed_form_generator(r)
            for n in range(r, r + 5):
                for k in range(n + r + 4):
                    vanishes = f.evaluate(k * k, n * n) == 0
                    self.assertEqual(vanishes, abs(n - r) <= k <= n + r, (r, n, k))

    def test_bad_index(self):
        with self.assertRaises(PreconditionError):
            closed_form_generator(0)
        with self.assertRaises(PreconditionError):
            generator_from_singular_vector(3)


class FusionTests(SimpleTestCase):
    def test_square_weights(self):
        self.assertEqual(fusion_dim_squares(1, 1, 1), 1)
        self.assertEqual(fusion_dim_squares(1, 1, 3), 0)
        self.assertEqual(fusion_dim_squares(0, 5, 5), 1)
        self.assertEqual(fusion_dim_squares(0, 5, 4), 0)

    def test_slot_symmetry(self):
        for m in range(5):
            for n in range(5):
                for k in range(10):
                    self.assertEqual(fusion_dim_squares(m, n, k), fusion_dim_squares(n, m, k))

    def test_generic_weights(self):
        self.assertEqual(fusion_dim_generic(2, 2, 2), 1)
        self.assertEqual(fusion_dim_generic(2, 2, 7), 0)
        self.assertEqual(fusion_dim_generic(1, 3, 2), 0)
        with self.assertRaises(PreconditionError):
            fusion_dim_generic(1, 4, 4)

    def test_nonsquare_pair(self):
        self.assertEqual(fusion_dim_nonsquare_pair(2, 3), 0)
        self.assertEqual(fusion_dim_nonsquare_pair(3, 5), 0)
        with self.assertRaises(PreconditionError):
            fusion_dim_nonsquare_pair(2, 2)
        with self.assertRaises(PreconditionError):
            fusion_dim_nonsquare_pair(4, 3)

    def test_table(self):
        table = fusion_table(3, 3, 6)
        self.assertEqual(len(table), 4 * 4 * 7)
        nonzero = {(e.m, e.n, e.k) for e in table if e.dim}
        self.assertIn((1, 1, 0), nonzero)
        self.assertIn((2, 3, 5), nonzero)
        self.assertNotIn((2, 3, 6), nonzero)

    def test_contracted_generator_roots(self):
        for m, n in [(1, 1), (2, 3), (3, 1), (0, 4)]:
            poly = contracted_generator(m, n)
            self.assertEqual(max(poly), 2 * min(m, n) + 1)
            for root in contracted_roots(m, n):
                self.assertEqual(sum(c * root ** d for d, c in poly.items()), 0)
