from fractions import Fraction

from django.test import SimpleTestCase

from exactlin.matrix import det, nullspace, rank

from .verma import (
    ModuleElement,
    VermaParams,
    apply_mode,
    first_singular_level,
    graded_dims_irreducible,
    gram_matrix,
    partition_count,
    partitions,
    quarter_square_root,
    singular_vectors,
)


def hw(c, h):
    return ModuleElement.highest_weight(VermaParams(c, h))


class PartitionTests(SimpleTestCase):
    def test_empty(self):
        self.assertEqual(partitions(0), [()])

    def test_counts(self):
        self.assertEqual(len(partitions(4)), 5)
        self.assertEqual(len(partitions(8)), 22)

    def test_reverse_lexicographic(self):
        self.assertEqual(partitions(4), [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])

    def test_quarter_squares(self):
        self.assertEqual(quarter_square_root(Fraction(1, 4)), 1)
        self.assertEqual(quarter_square_root(4), 4)
        self.assertIsNone(quarter_square_root(2))


class ModeActionTests(SimpleTestCase):
    def test_l1_on_l_minus1(self):
        p = VermaParams(Fraction(1), Fraction(3, 7))
        v = ModuleElement.basis_vector(p, (1,))
        self.assertEqual(apply_mode(1, v).terms, {(): Fraction(6, 7)})

    def test_l2_on_l_minus2(self):
        c, h = Fraction(2, 3), Fraction(5)
        v = ModuleElement.basis_vector(VermaParams(c, h), (2,))
        self.assertEqual(apply_mode(2, v).terms, {(): 4 * h + c / 2})

    def test_creation_on_vacuum(self):
        self.assertEqual(apply_mode(-1, hw(1, 0)).terms, {(1,): 1})

    def test_creation_is_reordered(self):
        # L(-1) L(-2) v = L(-2) L(-1) v + L(-3) v
        p = VermaParams(1, 1)
        result = apply_mode(-1, ModuleElement.basis_vector(p, (2,)))
        self.assertEqual(result.terms, {(2, 1): 1, (3,): 1})

    def test_l0_is_grading(self):
        p = VermaParams(1, 2)
        v = ModuleElement.basis_vector(p, (2, 1))
        self.assertEqual(apply_mode(0, v).terms, {(2, 1): 5})


class GramMatrixTests(SimpleTestCase):
    def test_level_one(self):
        self.assertEqual(gram_matrix(VermaParams(1, 1), 1).to_rows(), [[2]])
        self.assertEqual(gram_matrix(VermaParams(1, 0), 1).to_rows(), [[0]])

    def test_level_three_degenerates_at_h_1(self):
        g = gram_matrix(VermaParams(1, 1), 3)
        self.assertEqual((g.rows, g.cols), (3, 3))
        self.assertEqual(det(g), 0)
        self.assertEqual(len(nullspace(g)), 1)

    def test_symmetry(self):
        for c, h in [(1, 0), (1, 1), (Fraction(1, 2), Fraction(1, 16)), (2, 3)]:
            for level in range(6):
                self.assertTrue(gram_matrix(VermaParams(c, h), level).is_symmetric())

    def test_singular_levels_at_c_1(self):
        for h, expected in [(0, 1), (1, 3), (4, 5)]:
            params = VermaParams(1, h)
            self.assertEqual(first_singular_level(params, 6), expected)
            self.assertEqual(len(nullspace(gram_matrix(params, expected))), 1)

    def test_generic_weights_are_irreducible(self):
        for c, h in [(1, 2), (1, 3), (2, 1)]:
            for level in range(7):
                self.assertNotEqual(det(gram_matrix(VermaParams(c, h), level)), 0)

    def test_rank_matches_quotient_by_submodule(self):
        for m in range(3):
            params = VermaParams(1, m * m)
            step = 2 * m + 1
            for n in range(2 * m + 5):
                self.assertEqual(
                    rank(gram_matrix(params, n)),
                    partition_count(n) - partition_count(n - step),
                )

    def test_kernel_is_stable_under_positive_modes(self):
        params = VermaParams(1, 1)
        kernels = {n: nullspace(gram_matrix(params, n)) for n in (2, 3, 4)}
        for vector in kernels[4]:
            e = ModuleElement(params, dict(zip(partitions(4), vector)), 4)
            for m in (1, 2):
                image = apply_mode(m, e)
                g = gram_matrix(params, 4 - m)
                self.assertTrue(all(x == 0 for x in g.matvec(image.to_vector())))


class SingularVectorTests(SimpleTestCase):
    def test_vacuum_module(self):
        vectors = singular_vectors(VermaParams(1, 0), 1)
        self.assertEqual([v.terms for v in vectors], [{(1,): 1}])

    def test_none_below_singular_level(self):
        self.assertEqual(singular_vectors(VermaParams(1, 1), 2), [])

    def test_annihilated_at_singular_level(self):
        for h, level in [(1, 3), (4, 5)]:
            vectors = singular_vectors(VermaParams(1, h), level)
            self.assertEqual(len(vectors), 1)
            v = vectors[0]
            self.assertEqual(v.coefficient(partitions(level)[0]), 1)
            self.assertTrue(apply_mode(1, v).is_zero())
            self.assertTrue(apply_mode(2, v).is_zero())
            for m in range(3, level + 1):
                self.assertTrue(apply_mode(m, v).is_zero())


class GradedDimensionTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(graded_dims_irreducible(VermaParams(1, 2), 3), [1, 1, 2, 3])
        self.assertEqual(graded_dims_irreducible(VermaParams(1, 1), 3), [1, 1, 2, 2])
        self.assertEqual(graded_dims_irreducible(VermaParams(2, 1), 3), [1, 1, 2, 3])
