import random
from fractions import Fraction

from django.test import SimpleTestCase

from .exceptions import DimensionMismatchError, SingularMatrixError
from .matrix import (
    Matrix,
    as_rational,
    det,
    format_rational,
    interpolate,
    nullspace,
    rank,
    solve,
    vandermonde,
)


def random_matrix(rng, rows, cols, spread=4):
    return Matrix.from_rows(
        [[Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(cols)]
         for _ in range(rows)],
        cols=cols,
    )


class RationalParsingTests(SimpleTestCase):
    def test_literals(self):
        self.assertEqual(as_rational("15/49"), Fraction(15, 49))
        self.assertEqual(as_rational("-3"), Fraction(-3))
        self.assertEqual(as_rational(7), Fraction(7))

    def test_floats_are_refused(self):
        with self.assertRaises(TypeError):
            as_rational(0.5)
        with self.assertRaises(ValueError):
            as_rational("0.5")

    def test_format(self):
        self.assertEqual(format_rational(Fraction(220, 49)), "220/49")
        self.assertEqual(format_rational(Fraction(-4, 2)), "-2")


class RankTests(SimpleTestCase):
    def test_identity(self):
        self.assertEqual(rank(Matrix.identity(2)), 2)

    def test_zero(self):
        self.assertEqual(rank(Matrix.zeros(3, 3)), 0)

    def test_vandermonde_on_squares(self):
        self.assertEqual(rank(vandermonde([1, 4, 9])), 3)

    def test_rank_nullity(self):
        rng = random.Random(7)
        for _ in range(25):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = random_matrix(rng, rows, cols, spread=2)
            self.assertEqual(rank(m) + len(nullspace(m)), cols)


class NullspaceTests(SimpleTestCase):
    def test_identity_has_trivial_kernel(self):
        self.assertEqual(nullspace(Matrix.identity(3)), [])

    def test_single_row(self):
        self.assertEqual(nullspace(Matrix.from_rows([[1, 1]])), [(1, -1)])

    def test_kernel_vectors_are_annihilated(self):
        rng = random.Random(11)
        for _ in range(25):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(2, 6), spread=2)
            for v in nullspace(m):
                self.assertTrue(all(x == 0 for x in m.matvec(v)))


class DeterminantTests(SimpleTestCase):
    def test_identity(self):
        self.assertEqual(det(Matrix.identity(4)), 1)

    def test_swap(self):
        self.assertEqual(det(Matrix.from_rows([[0, 1], [1, 0]])), -1)

    def test_row_transposition_flips_sign(self):
        rng = random.Random(3)
        for _ in range(20):
            m = random_matrix(rng, 4, 4)
            self.assertEqual(det(m.swap_rows(0, 2)), -det(m))

    def test_multiplicative(self):
        rng = random.Random(5)
        a, b = random_matrix(rng, 3, 3), random_matrix(rng, 3, 3)
        self.assertEqual(det(a @ b), det(a) * det(b))

    def test_non_square(self):
        with self.assertRaises(DimensionMismatchError):
            det(Matrix.zeros(2, 3))


class SolveTests(SimpleTestCase):
    def test_highest_weight_system(self):
        # 5a + 3b = 15, 12a + 17b = 80
        m = Matrix.from_rows([[5, 3], [12, 17]])
        self.assertEqual(solve(m, [15, 80]), (Fraction(15, 49), Fraction(220, 49)))

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            solve(Matrix.from_rows([[1, 2], [2, 4]]), [1, 2])

    def test_interpolation(self):
        # 1 - 2t + t^3
        nodes = [0, 1, 2, 3]
        values = [1 - 2 * t + t ** 3 for t in nodes]
        self.assertEqual(interpolate(nodes, values), (1, -2, 0, 1))
