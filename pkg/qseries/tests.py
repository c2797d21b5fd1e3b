from fractions import Fraction

from django.test import SimpleTestCase

from virasoro.verma import VermaParams, graded_dims_irreducible, partition_count

from .characters import (
    effective_central_charge,
    irr_character_c1,
    lattice_character,
    lattice_decomposition_check,
    partition_gap_series,
    sl2_tensor_multiplicities,
    verma_character,
)
from .exceptions import (
    InvalidWeightError,
    SeriesMismatchError,
    SeriesOrderError,
    UnsupportedWeightError,
)
from .growth import POLYNOMIAL, SUPERPOLYNOMIAL, growth_report
from .series import QSeries, eta_series, partition_numbers, theta_series


class SeriesArithmeticTests(SimpleTestCase):
    def test_partition_numbers(self):
        self.assertEqual(partition_numbers(8), [partition_count(n) for n in range(9)])

    def test_multiplication_truncates(self):
        a = QSeries.from_coefficients([1, 1, 1, 1])
        b = QSeries.from_coefficients([1, -1])
        self.assertEqual((a * b).coeffs, (1, 0))

    def test_inverse(self):
        s = QSeries.from_coefficients([2, 1, 0, 3], offset=Fraction(1, 3))
        product = s * s.inverse()
        self.assertEqual(product.offset, 0)
        self.assertEqual(product.coeffs, (1, 0, 0, 0))

    def test_alignment(self):
        a = QSeries.from_coefficients([1, 2, 3], offset=0)
        b = QSeries.from_coefficients([5, 7, 9], offset=1)
        total = a + b
        self.assertEqual(total.offset, 0)
        self.assertEqual(total.coeffs, (1, 7, 10))

    def test_incompatible_offsets(self):
        with self.assertRaises(SeriesMismatchError):
            QSeries.from_coefficients([1]) + QSeries.from_coefficients([1], offset=Fraction(1, 2))


class CharacterTests(SimpleTestCase):
    def test_verma(self):
        self.assertEqual(verma_character(1, 0, 3).coeffs, (1, 1, 2, 3))
        self.assertEqual(verma_character(1, Fraction(1, 4), 5).offset, Fraction(1, 4) - Fraction(1, 24))
        self.assertEqual(verma_character(Fraction(7, 3), 5, 0).coeffs, (1,))

    def test_irreducible(self):
        self.assertEqual(irr_character_c1(1, 4).coeffs, (1, 1, 2, 2, 4))
        self.assertEqual(irr_character_c1(0, 2).coeffs, (1, 0, 1))
        self.assertEqual(irr_character_c1(2, 3).coeffs, (1, 1, 2, 3))

    def test_odd_quarter_square_rejected(self):
        with self.assertRaises(UnsupportedWeightError):
            irr_character_c1(Fraction(1, 4), 5)
        with self.assertRaises(UnsupportedWeightError):
            irr_character_c1(Fraction(9, 4), 5)

    def test_matches_gram_ranks(self):
        for m in range(3):
            dims = graded_dims_irreducible(VermaParams(1, m * m), 8)
            self.assertEqual(list(irr_character_c1(m * m, 8).coeffs), dims)

    def test_eta_cancels_verma(self):
        for c, h in [(1, 0), (Fraction(1, 2), Fraction(1, 16)), (3, 2)]:
            product = eta_series(12) * verma_character(c, h, 12)
            self.assertEqual(product.nonzero_terms(), [(h + Fraction(1 - c) / 24, 1)])

    def test_eta_and_theta(self):
        eta = eta_series(5)
        self.assertEqual(eta.offset, Fraction(1, 24))
        self.assertEqual(eta.coeffs, (1, -1, -1, 0, 0, 1))
        theta = theta_series(9)
        self.assertEqual([theta[n] for n in (0, 1, 4, 9)], [1, 2, 2, 2])
        self.assertEqual(theta[2], 0)

    def test_effective_central_charge(self):
        self.assertEqual(effective_central_charge(1, 0), 1)
        self.assertEqual(effective_central_charge(Fraction(1, 2), 0), Fraction(1, 2))


class LatticeTests(SimpleTestCase):
    def test_decomposition(self):
        for order in (0, 10, 50):
            check = lattice_decomposition_check(order)
            self.assertTrue(check.holds)
            self.assertTrue(check.residual.is_zero())

    def test_lattice_character(self):
        series = lattice_character(6)
        self.assertEqual(series.offset, Fraction(-1, 24))
        # theta / eta: 1 + 3q + 4q^2 + 7q^3 + 13q^4 + ...
        self.assertEqual(series.coeffs[:5], (1, 3, 4, 7, 13))

    def test_sl2_rule(self):
        self.assertEqual(sl2_tensor_multiplicities(2, 2), [0, 2, 4])
        self.assertEqual(sl2_tensor_multiplicities(4, 2), [2, 4, 6])
        self.assertEqual(sl2_tensor_multiplicities(0, 6), [6])
        with self.assertRaises(InvalidWeightError):
            sl2_tensor_multiplicities(1, 2)

    def test_sl2_dimensions(self):
        for d1 in range(0, 12, 2):
            for d2 in range(0, 12, 2):
                weights = sl2_tensor_multiplicities(d1, d2)
                self.assertEqual(sum(w + 1 for w in weights), (d1 + 1) * (d2 + 1))


class GrowthTests(SimpleTestCase):
    def test_theta_is_bounded(self):
        report = growth_report(theta_series(200), (50, 200), [1, 2, 3])
        self.assertEqual(report.verdict, POLYNOMIAL)
        self.assertEqual(set(report.witnesses.values()), {None})

    def test_partition_type_growth(self):
        report = growth_report(partition_gap_series(200), (50, 200), [1, 2, 3])
        self.assertEqual(report.verdict, SUPERPOLYNOMIAL)
        self.assertTrue(all(50 <= n <= 200 for n in report.witnesses.values()))

    def test_lattice_algebra_is_bounded(self):
        series = eta_series(200) * lattice_character(200)
        self.assertEqual(series.offset, 0)
        self.assertEqual(series.coeffs, theta_series(200).coeffs)
        self.assertLessEqual(max(abs(a) for a in series.coeffs), 2)
        report = growth_report(series, (50, 200), [1, 2, 3])
        self.assertEqual(report.verdict, POLYNOMIAL)

    def test_zero_series(self):
        report = growth_report(QSeries.monomial(20, coefficient=0), (2, 20), [1])
        self.assertEqual(report.verdict, POLYNOMIAL)

    def test_negative_order(self):
        for build in (eta_series, theta_series, partition_gap_series, lattice_decomposition_check):
            with self.assertRaises(SeriesOrderError):
                build(-1)
        with self.assertRaises(SeriesOrderError):
            irr_character_c1(1, -1)

    def test_window_past_order(self):
        with self.assertRaises(SeriesOrderError):
            growth_report(theta_series(10), (5, 20), [1])
