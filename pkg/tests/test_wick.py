import unittest
from fractions import Fraction

from src.combinatorics.partitions import Partition, enumerate_partitions
from src.exceptions import EnumerationCapError
from src.integrals.wick import (
    closed_form_schur_average,
    gaussian_schur_average,
    pairings,
    schur_average,
    wick_expectation,
    word_moment,
)

P = Partition.parse


class TestWick(unittest.TestCase):
    def test_pairing_counts(self):
        self.assertEqual(len(list(pairings(list(range(4))))), 3)
        self.assertEqual(len(list(pairings(list(range(8))))), 105)

    def test_single_matrix_moments(self):
        for N in range(1, 6):
            self.assertEqual(wick_expectation(P("1"), N), 0)
            self.assertEqual(wick_expectation(P("2"), N), N)
            self.assertEqual(wick_expectation(P("1,1"), N), 1)
            self.assertEqual(wick_expectation(P("4"), N), 2 * N + Fraction(1, N))

    def test_two_factor_word(self):
        # E tr(H_1 H_2)^2 = 1/N for independent factors
        for N in range(1, 5):
            self.assertEqual(word_moment(P("2"), N, 2), Fraction(1, N))
            self.assertEqual(word_moment(P("1,1"), N, 2), 1)

    def test_cap(self):
        with self.assertRaises(EnumerationCapError):
            word_moment(P("10"), 3)


class TestGaussianSchurAverages(unittest.TestCase):
    def test_degree_two(self):
        for N in range(1, 6):
            self.assertEqual(gaussian_schur_average(P("2"), N), Fraction(N + 1, 2))
            self.assertEqual(gaussian_schur_average(P("1,1"), N), Fraction(1 - N, 2))

    def test_odd_weight_vanishes(self):
        self.assertEqual(gaussian_schur_average(P("2,1"), 4), 0)

    def test_wick_matches_closed_form(self):
        for d in (2, 4, 6):
            for lam in enumerate_partitions(d):
                for N in range(2, 6):
                    with self.subTest(lam=lam, N=N):
                        self.assertEqual(gaussian_schur_average(lam, N), closed_form_schur_average(lam, N))

    def test_closed_form_beyond_cap(self):
        lam = P("5,5")
        self.assertEqual(schur_average(lam, 4), closed_form_schur_average(lam, 4))


if __name__ == "__main__":
    unittest.main()
