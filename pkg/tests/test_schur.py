import unittest
from fractions import Fraction

import numpy as np

from src.combinatorics.partitions import Partition, enumerate_partitions
from src.combinatorics.schur import (
    PowerSumSpec,
    batched_power_sums,
    brick_specialization,
    principal_specialization,
    schur_from_power_sums,
    schur_of_matrix,
    schur_of_power_sum_array,
    schur_of_spectrum,
)
from src.exceptions import InvalidInputError


class TestPowerSumSpec(unittest.TestCase):
    def test_parse_exact(self):
        spec = PowerSumSpec.parse("1:1,2:1/2")
        self.assertTrue(spec.exact)
        self.assertEqual(spec.get(2), Fraction(1, 2))
        self.assertEqual(spec.get(3), 0)

    def test_parse_floating(self):
        spec = PowerSumSpec.parse("1:0.5,2:1j")
        self.assertFalse(spec.exact)
        self.assertEqual(spec.get(2), 1j)

    def test_bad_entry(self):
        with self.assertRaises(InvalidInputError):
            PowerSumSpec.parse("1=2")


class TestSchurEvaluation(unittest.TestCase):
    def test_exact_point(self):
        # s_(2) = (p_1^2 + p_2) / 2
        self.assertEqual(schur_from_power_sums(Partition((2,)), PowerSumSpec.parse("1:1,2:1/2")), Fraction(3, 4))
        self.assertEqual(schur_from_power_sums(Partition((1, 1)), PowerSumSpec.parse("1:1,2:1/2")), Fraction(1, 4))

    def test_homogeneous_in_the_power_sums(self):
        values = {1: Fraction(1, 2), 2: Fraction(-3), 3: Fraction(2, 7), 4: Fraction(5)}
        p = PowerSumSpec.exact_from(values)
        for c in (Fraction(3, 2), Fraction(-2)):
            scaled = PowerSumSpec.exact_from({k: c ** k * v for k, v in values.items()})
            for d in range(1, 5):
                for lam in enumerate_partitions(d):
                    with self.subTest(c=c, lam=lam):
                        self.assertEqual(schur_from_power_sums(lam, scaled), c ** d * schur_from_power_sums(lam, p))

    def test_empty_partition_is_one(self):
        self.assertEqual(schur_from_power_sums(Partition(()), PowerSumSpec.parse("1:5")), 1)

    def test_diagonal_matrix(self):
        X = np.diag([2.0, 3.0])
        self.assertAlmostEqual(schur_of_matrix(Partition((1, 1)), X), 6)
        self.assertAlmostEqual(schur_of_matrix(Partition((2,)), X), 19)
        self.assertAlmostEqual(schur_of_matrix(Partition((2, 1)), X), 30)
        self.assertAlmostEqual(schur_of_spectrum(Partition((2, 1)), [2, 3]), 30)

    def test_matrix_is_basis_independent(self):
        rng = np.random.default_rng(7)
        A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        eigenvalues = np.linalg.eigvals(A)
        for lam in enumerate_partitions(3):
            self.assertAlmostEqual(schur_of_matrix(lam, A), schur_of_spectrum(lam, eigenvalues), places=8)

    def test_batched_matches_single(self):
        rng = np.random.default_rng(3)
        X = rng.standard_normal((4, 3, 3)) + 0j
        sums = batched_power_sums(X, 3)
        self.assertEqual(sums.shape, (4, 3))
        values = schur_of_power_sum_array(Partition((2, 1)), sums)
        for b in range(4):
            self.assertAlmostEqual(values[b], schur_of_matrix(Partition((2, 1)), X[b]), places=8)


class TestSpecializations(unittest.TestCase):
    def test_principal(self):
        for N in range(1, 6):
            self.assertEqual(principal_specialization(Partition((2,)), N), Fraction(N * (N + 1), 2))
            self.assertEqual(principal_specialization(Partition((1,)), N), N)
        self.assertEqual(principal_specialization(Partition((1, 1, 1)), 2), 0)

    def test_principal_matches_identity_matrix(self):
        for lam in enumerate_partitions(4):
            self.assertAlmostEqual(schur_of_matrix(lam, np.eye(3)), float(principal_specialization(lam, 3)), places=9)

    def test_brick(self):
        self.assertEqual(brick_specialization(Partition((2,)), Fraction(1, 5)), Fraction(1, 10))
        self.assertEqual(brick_specialization(Partition((1, 1)), Fraction(1, 5)), Fraction(-1, 10))
        self.assertEqual(brick_specialization(Partition((2, 1)), Fraction(1, 5)), 0)
        self.assertEqual(
            brick_specialization(Partition((2, 2)), Fraction(1, 3)),
            schur_from_power_sums(Partition((2, 2)), PowerSumSpec.exact_from({2: Fraction(1, 3)})),
        )


if __name__ == "__main__":
    unittest.main()
