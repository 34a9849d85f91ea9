from typing import Iterator, Optional, Tuple

import numpy as np

from src.combinatorics.partitions import enumerate_partitions
from src.integrals.ensembles import chunk_streams, complex_gaussian
from src.integrals.monte_carlo import mc_schur_split
from src.models.schemas import CheckResult, EnsembleKind, VerificationOptions
from src.suites.base_suite import BaseSuite

MAX_WEIGHT = 4
N_VALUES = (3, 4)


def sample_pair(seed: int, N: int) -> Tuple[np.ndarray, np.ndarray]:
    """A generic complex A and a non-normal upper-triangular B, reproducible from the seed."""
    rng_a, rng_b = chunk_streams(seed, 2)
    A = complex_gaussian(rng_a, (N, N), 1.0)
    B = np.triu(complex_gaussian(rng_b, (N, N), 1.0)) + np.eye(N)
    return A, B


class Prop1Suite(BaseSuite):
    """
    The split formula  int s_lambda(U A U^dag B) dU = s_lambda(A) s_lambda(B) / s_lambda(I_N)
    for arbitrary complex A and B.
    """

    def __init__(self, options: Optional[VerificationOptions] = None):
        super().__init__(name="prop1-mc", options=options)

    def get_description(self) -> str:
        return f"Haar split formula for |lambda| <= {MAX_WEIGHT}, N in {N_VALUES}"

    def checks(self) -> Iterator[CheckResult]:
        offset = 0
        for N in N_VALUES:
            A, B = sample_pair(self.options.seed + N, N)
            for d in range(1, MAX_WEIGHT + 1):
                for lam in enumerate_partitions(d):
                    if lam.length > N:
                        continue
                    offset += 1
                    config = self.ensemble(N, EnsembleKind.HAAR_UNITARY, offset)
                    estimate, rhs = mc_schur_split(lam, A, B, self.options.samples, config)
                    yield self.statistical(f"lambda={lam.encode()}, N={N}", estimate, rhs)
