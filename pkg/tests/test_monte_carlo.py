import unittest
from fractions import Fraction

import numpy as np

from src.combinatorics.partitions import Partition
from src.exceptions import InvalidInputError
from src.integrals.ensembles import (
    chunk_sizes,
    chunk_streams,
    normal_batch,
    sample_gue,
    sample_haar_unitary,
    sample_normal_matrix,
)
from src.integrals.monte_carlo import (
    mc_moment,
    mc_normal_trace_moment,
    mc_schur_average,
    mc_schur_split,
    mc_weingarten_monomial,
    normal_second_moment,
    schur_split_rhs,
    summarize,
)
from src.models.schemas import EnsembleConfig, EnsembleKind, MonomialSpec, TraceWord
from src.suites.prop1_suite import sample_pair

P = Partition.parse
SAMPLES = 20_000


class TestStreams(unittest.TestCase):
    def test_chunk_sizes(self):
        self.assertEqual(chunk_sizes(25, 10), [10, 10, 5])
        self.assertEqual(chunk_sizes(20, 10), [10, 10])
        with self.assertRaises(InvalidInputError):
            chunk_sizes(0, 10)

    def test_streams_are_reproducible(self):
        a = [rng.standard_normal(3) for rng in chunk_streams(11, 2)]
        b = [rng.standard_normal(3) for rng in chunk_streams(11, 2)]
        np.testing.assert_array_equal(a[0], b[0])
        self.assertFalse(np.allclose(a[0], a[1]))


class TestSamplers(unittest.TestCase):
    def test_gue_is_hermitian_and_seeded(self):
        config = EnsembleConfig(N=4, kind=EnsembleKind.GUE, seed=3)
        H = sample_gue(config)
        np.testing.assert_allclose(H, H.conj().T)
        np.testing.assert_array_equal(H, sample_gue(config))

    def test_haar_is_unitary(self):
        U = sample_haar_unitary(EnsembleConfig(N=5, kind=EnsembleKind.HAAR_UNITARY, seed=2))
        np.testing.assert_allclose(U @ U.conj().T, np.eye(5), atol=1e-10)

    def test_normal_matrices_commute_with_adjoint(self):
        M = sample_normal_matrix(EnsembleConfig(N=4, kind=EnsembleKind.NORMAL, seed=9))
        np.testing.assert_allclose(M @ M.conj().T, M.conj().T @ M, atol=1e-8)
        batch = normal_batch(chunk_streams(1, 1)[0], EnsembleConfig(N=3, kind=EnsembleKind.NORMAL), 5)
        self.assertEqual(batch.shape, (5, 3, 3))

    def test_kind_mismatch(self):
        with self.assertRaises(InvalidInputError):
            sample_gue(EnsembleConfig(N=3, kind=EnsembleKind.HAAR_UNITARY))


class TestEstimators(unittest.TestCase):
    def setUp(self):
        self.gue = EnsembleConfig(N=3, kind=EnsembleKind.GUE, seed=5)
        self.haar = EnsembleConfig(N=3, kind=EnsembleKind.HAAR_UNITARY, seed=6)

    def test_summarize(self):
        estimate = summarize(np.array([1.0, 3.0]), seed=0)
        self.assertEqual(estimate.mean, 2)
        self.assertAlmostEqual(estimate.standard_error, 1.0)

    def test_gue_second_moment(self):
        estimate = mc_moment(TraceWord(n=1), P("2"), SAMPLES, self.gue)
        self.assertTrue(estimate.agrees_with(3), estimate)
        self.assertEqual(estimate.samples, SAMPLES)

    def test_two_factor_moment(self):
        estimate = mc_moment(TraceWord(n=2), P("2"), SAMPLES, self.gue)
        self.assertTrue(estimate.agrees_with(1 / 3), estimate)

    def test_worker_count_does_not_change_result(self):
        serial = self.gue.model_copy(update={"chunk_size": 1000, "workers": 1})
        threaded = serial.model_copy(update={"workers": 3})
        a = mc_moment(TraceWord(n=1), P("4"), 5000, serial)
        b = mc_moment(TraceWord(n=1), P("4"), 5000, threaded)
        self.assertEqual(a.mean, b.mean)
        self.assertEqual(a.standard_error, b.standard_error)

    def test_source_shape_mismatch(self):
        with self.assertRaises(InvalidInputError):
            mc_moment(TraceWord(n=1, sources=[np.eye(2)]), P("2"), 10, self.gue)

    def test_weingarten_monomial(self):
        m = MonomialSpec(a=[1, 1], b=[1, 1], a_prime=[1, 1], b_prime=[1, 1], N=3)
        estimate = mc_weingarten_monomial(m, SAMPLES, self.haar)
        self.assertTrue(estimate.agrees_with(float(Fraction(1, 6))), estimate)

    def test_schur_split_for_non_normal_pair(self):
        A, B = sample_pair(1, 3)
        estimate, rhs = mc_schur_split(P("2,1"), A, B, SAMPLES, self.haar)
        self.assertAlmostEqual(rhs, schur_split_rhs(P("2,1"), A, B))
        self.assertTrue(estimate.agrees_with(rhs), (estimate, rhs))

    def test_schur_split_rejects_long_partitions(self):
        with self.assertRaises(InvalidInputError):
            schur_split_rhs(P("1,1,1,1"), np.eye(3), np.eye(3))

    def test_gaussian_schur_average(self):
        estimate = mc_schur_average(P("2"), SAMPLES, self.gue)
        self.assertTrue(estimate.agrees_with(2), estimate)


class TestNormalEnsemble(unittest.TestCase):
    def test_quadrature(self):
        for N in range(1, 6):
            self.assertAlmostEqual(normal_second_moment(N), N + 1, places=6)

    def test_sampled_trace_moment(self):
        config = EnsembleConfig(N=3, kind=EnsembleKind.NORMAL, seed=4)
        estimate = mc_normal_trace_moment(SAMPLES, config)
        self.assertTrue(estimate.agrees_with(normal_second_moment(3)), estimate)


if __name__ == "__main__":
    unittest.main()
