from typing import Iterator, Optional

from src.combinatorics.partitions import Partition, enumerate_partitions
from src.integrals.monte_carlo import mc_moment, mc_schur_average
from src.integrals.wick import closed_form_schur_average, gaussian_schur_average, wick_expectation
from src.models.schemas import CheckResult, TraceWord, VerificationOptions
from src.suites.base_suite import BaseSuite

EXACT_MAX_WEIGHT = 6
EXACT_N_VALUES = range(2, 7)
MC_MAX_WEIGHT = 4
MC_N = 3


class GaussianAveragesSuite(BaseSuite):
    """
    <s_lambda(H)> from Wick's theorem against (N)_lambda s_lambda(0, 1/N, 0, ...)
    and against GUE sampling.
    """

    def __init__(self, options: Optional[VerificationOptions] = None):
        super().__init__(name="gaussian-averages", options=options)

    def get_description(self) -> str:
        return "Gaussian Schur averages: Wick oracle, closed form and Monte Carlo"

    def checks(self) -> Iterator[CheckResult]:
        for N in EXACT_N_VALUES:
            for d in range(1, EXACT_MAX_WEIGHT + 1):
                for lam in enumerate_partitions(d):
                    yield self.exact(
                        f"<s_{lam.encode()}>, N={N}", gaussian_schur_average(lam, N), closed_form_schur_average(lam, N)
                    )
        offset = 0
        for d in range(1, MC_MAX_WEIGHT + 1):
            for lam in enumerate_partitions(d):
                offset += 1
                estimate = mc_schur_average(lam, self.options.samples, self.ensemble(MC_N, offset=offset))
                yield self.statistical(f"E[s_{lam.encode()}(H)], N={MC_N}", estimate, complex(gaussian_schur_average(lam, MC_N)))
        for mu in (Partition((1,)), Partition((2,)), Partition((4,))):
            offset += 1
            estimate = mc_moment(TraceWord(n=1), mu, self.options.samples, self.ensemble(MC_N, offset=offset))
            yield self.statistical(f"E[tr H^{mu[0]}], N={MC_N}", estimate, complex(wick_expectation(mu, MC_N)))
