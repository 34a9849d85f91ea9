import unittest
from fractions import Fraction

from src.combinatorics.partitions import Partition, enumerate_partitions
from src.combinatorics.permutations import count_factorizations
from src.exceptions import CalibrationError, EnumerationCapError, InvalidInputError, ValidityWindowError
from src.models.schemas import ModelKind, ModelSpec, NormalizationRule, NormalProportionalityReport, Representation
from src.series.calibration import calibrate_normalization, power_of
from src.series.engine import (
    build_series,
    check_normal_proportionality,
    hurwitz_sum_coefficient,
    moment_coefficient,
    normal_model_coefficient,
    schur_source_coefficient,
    schur_sum_coefficient,
    source_coefficient,
    source_power_sum,
    source_series_term,
)

P = Partition.parse


class TestCoefficients(unittest.TestCase):
    def test_anchors(self):
        for N in range(2, 6):
            self.assertEqual(moment_coefficient(ModelSpec(N=N, n=1), P("2")), Fraction(N * N, 2))
            self.assertEqual(moment_coefficient(ModelSpec(N=N, n=2), P("2")), Fraction(1, 2))

    def test_odd_degree_vanishes(self):
        model = ModelSpec(N=4, n=1)
        self.assertEqual(moment_coefficient(model, P("2,1")), 0)
        self.assertEqual(schur_sum_coefficient(model, P("3")), 0)
        self.assertEqual(hurwitz_sum_coefficient(model, P("1")), 0)

    def test_three_forms_agree(self):
        for n in (1, 2):
            model = ModelSpec(N=4, n=n)
            for d in (2, 4):
                for mu in enumerate_partitions(d):
                    with self.subTest(n=n, mu=mu):
                        moment = moment_coefficient(model, mu)
                        self.assertEqual(schur_sum_coefficient(model, mu), moment)
                        self.assertEqual(hurwitz_sum_coefficient(model, mu), moment)

    def test_multi_factor_cap(self):
        with self.assertRaises(EnumerationCapError):
            moment_coefficient(ModelSpec(N=6, n=2), P("6"))

    def test_validity_window(self):
        model = ModelSpec(N=3, n=1)
        with self.assertRaises(ValidityWindowError):
            hurwitz_sum_coefficient(model, P("2,2"))
        # the identity keeps holding past the window
        self.assertEqual(hurwitz_sum_coefficient(model, P("2,2"), ignore_window=True), moment_coefficient(model, P("2,2")))

    def test_printed_rule_differs(self):
        model = ModelSpec(N=4, n=1, normalization=NormalizationRule.printed())
        self.assertNotEqual(hurwitz_sum_coefficient(model, P("1,1")), moment_coefficient(ModelSpec(N=4, n=1), P("1,1")))

    def test_identity_required_for_moments(self):
        model = ModelSpec(N=2, n=1, source_spectrum=[(1, 0), (2, 0)])
        with self.assertRaises(InvalidInputError):
            moment_coefficient(model, P("2"))
        with self.assertRaises(InvalidInputError):
            schur_sum_coefficient(model, P("2"))
        with self.assertRaises(InvalidInputError):
            hurwitz_sum_coefficient(model, P("2"))


class TestSourceCoefficients(unittest.TestCase):
    def test_unit_spectrum_collapses_to_identity(self):
        for N in (3, 4):
            model = ModelSpec(N=N, n=2, source_spectrum=[(1.0, 0.0)] * N)
            for mu in enumerate_partitions(2):
                hurwitz_form, schur_form = source_series_term(model, mu)
                expected = float(moment_coefficient(ModelSpec(N=N, n=2), mu))
                self.assertAlmostEqual(hurwitz_form, expected, places=9)
                self.assertAlmostEqual(schur_form, expected, places=9)

    def test_general_spectrum_forms_agree(self):
        model = ModelSpec(N=4, n=1, source_spectrum=[(0.5, 0.0), (1.0, 1.0), (-2.0, 0.0), (0.0, -1.0)])
        for mu in enumerate_partitions(4):
            hurwitz_form, schur_form = source_series_term(model, mu)
            self.assertAlmostEqual(hurwitz_form, schur_form, places=8)

    def test_per_kappa_forms_agree(self):
        model = ModelSpec(N=4, n=2)
        for kappa in enumerate_partitions(4):
            for mu in enumerate_partitions(4):
                self.assertEqual(source_coefficient(model, kappa, mu), schur_source_coefficient(model, kappa, mu))

    def test_power_sums_of_spectrum(self):
        model = ModelSpec(N=2, n=1, source_spectrum=[(1, 0), (2, 0)])
        # (1 + 4) * (1 + 2)
        self.assertAlmostEqual(source_power_sum(model, P("2,1")), 15)
        self.assertAlmostEqual(source_power_sum(model, P("0")), 1)
        self.assertAlmostEqual(source_power_sum(ModelSpec(N=3, n=1), P("2,2")), 9)

    def test_spectrum_order_is_irrelevant(self):
        spectrum = [(0.5, 0.0), (1.0, 1.0), (-2.0, 0.0), (0.0, -1.0)]
        shuffled = [spectrum[i] for i in (2, 0, 3, 1)]
        model = ModelSpec(N=4, n=2, source_spectrum=spectrum)
        other = ModelSpec(N=4, n=2, source_spectrum=shuffled)
        for mu in enumerate_partitions(4):
            for a, b in zip(source_series_term(model, mu), source_series_term(other, mu)):
                self.assertAlmostEqual(a, b, places=9)

    def test_spectrum_length(self):
        with self.assertRaises(ValueError):
            ModelSpec(N=3, n=1, source_spectrum=[(1, 0)])


class TestSeriesDocument(unittest.TestCase):
    def test_order_and_content(self):
        doc = build_series(ModelSpec(N=4, n=1), 4, [Representation.HURWITZ, Representation.MOMENT])
        keys = [(c.degree, c.mu.encode(), c.repr.value) for c in doc.coefficients]
        self.assertEqual(keys[:4], [(2, "2", "moment"), (2, "2", "hurwitz"), (2, "1,1", "moment"), (2, "1,1", "hurwitz")])
        self.assertEqual(len(keys), 2 * (2 + 5))
        for moment, hurwitz in zip(doc.coefficients[::2], doc.coefficients[1::2]):
            self.assertEqual(moment.value, hurwitz.value)

    def test_window_labels(self):
        doc = build_series(ModelSpec(N=2, n=1), 4, [Representation.HURWITZ], ignore_window=True)
        self.assertTrue(all(c.outside_window == (c.degree == 4) for c in doc.coefficients))
        with self.assertRaises(ValidityWindowError):
            build_series(ModelSpec(N=2, n=1), 4, [Representation.HURWITZ])

    def test_source_model_uses_kappa_keys(self):
        model = ModelSpec(N=2, n=1, source_spectrum=[(1, 0), (3, 0)])
        doc = build_series(model, 2, [Representation.MOMENT, Representation.SOURCE])
        self.assertEqual([(c.mu.encode(), c.kappa.encode()) for c in doc.coefficients],
                         [("2", "2"), ("2", "1,1"), ("1,1", "2"), ("1,1", "1,1")])

    def test_negative_degree(self):
        with self.assertRaises(InvalidInputError):
            build_series(ModelSpec(N=2), -1)


class TestCalibration(unittest.TestCase):
    def test_power_of(self):
        self.assertEqual(power_of(Fraction(9), 3), 2)
        self.assertEqual(power_of(Fraction(1, 16), 4), -2)
        self.assertEqual(power_of(Fraction(1), 5), 0)
        self.assertIsNone(power_of(Fraction(6), 3))

    def test_single_factor(self):
        report = calibrate_normalization(ModelSpec(N=3, n=1), 2)
        self.assertTrue(report.consistent)
        self.assertEqual(report.length_weight, 1)
        self.assertEqual(report.offsets, {"1,1": -1, "1,2": -2})
        self.assertFalse(report.hypothesis_confirmed)

    def test_two_factors(self):
        report = calibrate_normalization(ModelSpec(N=3, n=2), 1)
        self.assertEqual(report.length_weight, 1)
        self.assertEqual(report.offsets, {"2,1": -2})
        rule = report.rule()
        self.assertEqual(hurwitz_sum_coefficient(ModelSpec(N=4, n=2, normalization=rule), P("2")), Fraction(1, 2))

    def test_needs_three_values_of_N(self):
        with self.assertRaises(InvalidInputError):
            calibrate_normalization(ModelSpec(N=3, n=1), 1, [3, 4])


class TestNormalModel(unittest.TestCase):
    def test_frobenius_matches_oracle(self):
        model = ModelSpec(N=4, n=1, kind=ModelKind.NORMAL)
        c = normal_model_coefficient(model, P("2"), P("2"), [P("2")])
        self.assertEqual(Fraction(c.frobenius), Fraction(1, 2))
        profiles = [P("2"), P("2"), P("2"), P("2")]
        self.assertEqual(Fraction(c.frobenius), count_factorizations(profiles, 2))

    def test_profile_count(self):
        model = ModelSpec(N=4, n=2, kind=ModelKind.NORMAL)
        with self.assertRaises(InvalidInputError):
            normal_model_coefficient(model, P("2"), P("2"), [P("2")])

    def test_proportionality_is_reported(self):
        model = ModelSpec(N=4, n=1, kind=ModelKind.NORMAL)
        report = check_normal_proportionality(model, 1)
        self.assertIsInstance(report, NormalProportionalityReport)
        self.assertEqual((report.n, report.k, report.N), (1, 1, 4))
        self.assertFalse(report.proportional)
        self.assertIsNone(report.constant)
        self.assertTrue(report.mismatches)
        self.assertTrue(all(not c.proportional for c in report.mismatches))
        with self.assertRaises(CalibrationError):
            check_normal_proportionality(model, 1, strict=True)

    def test_normal_series(self):
        doc = build_series(ModelSpec(N=4, n=1, kind=ModelKind.NORMAL), 2, [Representation.SCHUR, Representation.HURWITZ])
        # (kappa, mu, t) over partitions of 2, two forms each
        self.assertEqual(len(doc.coefficients), 2 * 2 * 2 * 2)


if __name__ == "__main__":
    unittest.main()
