from fractions import Fraction
from typing import Iterator, Optional

from src.combinatorics.partitions import Partition, enumerate_partitions, z_of
from src.exceptions import CalibrationError
from src.integrals.monte_carlo import mc_moment
from src.models.schemas import CheckResult, ModelSpec, TraceWord, VerificationOptions
from src.series.calibration import calibrate_normalization
from src.series.engine import (
    hurwitz_sum_coefficient,
    moment_coefficient,
    schur_sum_coefficient,
    source_coefficient,
)
from src.suites.base_suite import BaseSuite

N_VALUES = (3, 4, 5)
MAX_N_FACTORS = 2
MAX_K = 2
MC_N = 3


class SeriesCalibrationSuite(BaseSuite):
    """
    Moment, Schur-sum and Hurwitz-sum coefficients agree once the exponent
    rule is calibrated; the coefficients also predict Monte Carlo moments.
    """

    def __init__(self, options: Optional[VerificationOptions] = None):
        super().__init__(name="series-calibration", options=options)

    def get_description(self) -> str:
        return f"series triple agreement for n <= {MAX_N_FACTORS}, k <= {MAX_K}, N in {N_VALUES}"

    def checks(self) -> Iterator[CheckResult]:
        p2 = Partition((2,))
        for N in N_VALUES:
            yield self.exact(f"n=1 coefficient of p_2, N={N}", moment_coefficient(ModelSpec(N=N, n=1), p2), Fraction(N * N, 2))
            yield self.exact(f"n=2 coefficient of p_2, N={N}", moment_coefficient(ModelSpec(N=N, n=2), p2), Fraction(1, 2))

        for n in range(1, MAX_N_FACTORS + 1):
            try:
                report = calibrate_normalization(ModelSpec(N=N_VALUES[0], n=n), MAX_K, N_VALUES)
            except CalibrationError as e:
                yield CheckResult(name=f"calibration n={n}", measured=str(e), expected="consistent", passed=False)
                continue
            rule = report.rule()
            yield CheckResult(
                name=f"calibration n={n}",
                measured=f"length weight {report.length_weight}, offsets {report.offsets}",
                expected="consistent",
                tolerance="exact",
                passed=report.consistent,
            )
            for N in N_VALUES:
                model = ModelSpec(N=N, n=n, normalization=rule)
                for k in range(1, MAX_K + 1):
                    for mu in enumerate_partitions(2 * k):
                        moment = moment_coefficient(model, mu)
                        label = f"n={n}, N={N}, mu={mu.encode()}"
                        yield self.exact(f"schur = moment, {label}", schur_sum_coefficient(model, mu), moment)
                        hurwitz = hurwitz_sum_coefficient(model, mu, ignore_window=True)
                        yield self.exact(f"hurwitz = moment, {label}", hurwitz, moment)
                        collapsed = sum(
                            (
                                source_coefficient(model, kappa, mu, ignore_window=True) * Fraction(N) ** kappa.length
                                for kappa in enumerate_partitions(2 * k)
                            ),
                            Fraction(0),
                        )
                        yield self.exact(f"source collapse, {label}", collapsed, hurwitz)

        offset = 0
        for n in range(1, MAX_N_FACTORS + 1):
            model = ModelSpec(N=MC_N, n=n)
            for d in (2, 4):
                for mu in enumerate_partitions(d):
                    offset += 1
                    implied = moment_coefficient(model, mu) * z_of(mu) / Fraction(MC_N) ** mu.length
                    estimate = mc_moment(TraceWord(n=n), mu, self.options.samples, self.ensemble(MC_N, offset=offset))
                    yield self.statistical(f"Monte Carlo moment n={n}, mu={mu.encode()}", estimate, complex(implied))
