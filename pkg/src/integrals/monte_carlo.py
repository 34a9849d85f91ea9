"""
Monte Carlo estimators over the ensembles in src.integrals.ensembles.

Each estimator is a per-chunk evaluation of a batch observable. Chunks are
drawn from their own Philox streams and reduced in chunk order, so the worker
count never changes a result.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Optional, Tuple

import numpy as np
from scipy.integrate import quad

from src.combinatorics.partitions import Partition
from src.combinatorics.schur import (
    batched_power_sums,
    principal_specialization,
    schur_of_matrix,
    schur_of_power_sum_array,
)
from src.exceptions import InvalidInputError
from src.integrals.ensembles import chunk_sizes, chunk_streams, draw, gue_batch, haar_batch
from src.models.schemas import EnsembleConfig, EnsembleKind, MCEstimate, MonomialSpec, TraceWord

logger = logging.getLogger(__name__)

Observable = Callable[[np.random.Generator, int], np.ndarray]


def summarize(values: np.ndarray, seed: int) -> MCEstimate:
    values = np.asarray(values, dtype=complex)
    n = values.size
    mean = values.mean()
    if n > 1:
        se = float(np.sqrt(np.sum(np.abs(values - mean) ** 2) / (n - 1) / n))
    else:
        se = 0.0
    return MCEstimate(mean_real=float(mean.real), mean_imag=float(mean.imag), standard_error=se, samples=n, seed=seed)


def run_chunks(config: EnsembleConfig, samples: int, evaluate: Observable) -> MCEstimate:
    sizes = chunk_sizes(samples, config.chunk_size)
    streams = chunk_streams(config.seed, len(sizes))
    logger.debug("Sampling %d values in %d chunks on %d workers", samples, len(sizes), config.workers)
    if config.workers == 1:
        parts = [evaluate(rng, size) for rng, size in zip(streams, sizes)]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(evaluate, streams, sizes))
    return summarize(np.concatenate(parts), config.seed)


def _with_kind(config: EnsembleConfig, kind: EnsembleKind, N: Optional[int] = None) -> EnsembleConfig:
    update = {"kind": kind}
    if N is not None:
        update["N"] = N
    return config.model_copy(update=update)


def _product_of_traces(sums: np.ndarray, mu: Partition) -> np.ndarray:
    out = np.ones(sums.shape[:-1], dtype=complex)
    for part in mu:
        out = out * sums[..., part - 1]
    return out


def mc_observable(config: EnsembleConfig, samples: int, observable: Callable[[np.ndarray], np.ndarray]) -> MCEstimate:
    """E[observable(X)] for X drawn from config.kind; observable maps a (batch, N, N) stack to (batch,)."""
    return run_chunks(config, samples, lambda rng, count: observable(draw(config, rng, count)))


def mc_moment(word: TraceWord, mu: Partition, samples: int, config: EnsembleConfig) -> MCEstimate:
    """E[prod_i tr (H_1 C_1 ... H_n C_n)^{mu_i}] with fresh independent GUE draws per factor."""
    config = _with_kind(config, EnsembleKind.GUE)
    N = config.N
    if word.sources is not None and word.sources[0].shape != (N, N):
        raise InvalidInputError(f"source matrices are {word.sources[0].shape}, ensemble is {N}x{N}")
    top = max(mu) if mu else 1

    def evaluate(rng: np.random.Generator, count: int) -> np.ndarray:
        W = np.broadcast_to(np.eye(N, dtype=complex), (count, N, N))
        for i in range(word.n):
            W = W @ gue_batch(rng, config, count)
            if word.sources is not None:
                W = W @ word.sources[i]
        return _product_of_traces(batched_power_sums(W, top), mu)

    return run_chunks(config, samples, evaluate)


def schur_split_rhs(lam: Partition, A: Any, B: Any) -> complex:
    """s_lambda(A) s_lambda(B) / s_lambda(I_N)."""
    A = np.asarray(A, dtype=complex)
    N = A.shape[0]
    if lam.length > N:
        raise InvalidInputError(f"l(lambda)={lam.length} > N={N}: s_lambda(I_N) vanishes")
    return schur_of_matrix(lam, A) * schur_of_matrix(lam, B) / float(principal_specialization(lam, N))


def mc_schur_split(
    lam: Partition, A: Any, B: Any, samples: int, config: EnsembleConfig
) -> Tuple[MCEstimate, complex]:
    """
    Haar average of s_lambda(U A U^dag B) against s_lambda(A) s_lambda(B) / s_lambda(I_N).
    A and B may be arbitrary complex matrices, normal or not.
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.ndim != 2 or A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise InvalidInputError(f"A and B must be square of one size, got {A.shape} and {B.shape}")
    rhs = schur_split_rhs(lam, A, B)
    config = _with_kind(config, EnsembleKind.HAAR_UNITARY, N=A.shape[0])
    d = max(lam.weight, 1)

    def evaluate(rng: np.random.Generator, count: int) -> np.ndarray:
        U = haar_batch(rng, config, count)
        X = U @ A @ np.conj(np.swapaxes(U, -1, -2)) @ B
        return schur_of_power_sum_array(lam, batched_power_sums(X, d))

    return run_chunks(config, samples, evaluate), rhs


def mc_weingarten_monomial(m: MonomialSpec, samples: int, config: EnsembleConfig) -> MCEstimate:
    """Haar average of U_{a_1 b_1} ... U_{a_d b_d} (U^dag)_{b'_1 a'_1} ... (U^dag)_{b'_d' a'_d'}."""
    config = _with_kind(config, EnsembleKind.HAAR_UNITARY, N=m.N)
    rows, cols = np.array(m.a, dtype=int) - 1, np.array(m.b, dtype=int) - 1
    rows_d, cols_d = np.array(m.a_prime, dtype=int) - 1, np.array(m.b_prime, dtype=int) - 1

    def evaluate(rng: np.random.Generator, count: int) -> np.ndarray:
        U = haar_batch(rng, config, count)
        # (U^dag)_{b' a'} = conj(U_{a' b'})
        return np.prod(U[:, rows, cols], axis=-1) * np.prod(np.conj(U[:, rows_d, cols_d]), axis=-1)

    return run_chunks(config, samples, evaluate)


def mc_schur_average(lam: Partition, samples: int, config: EnsembleConfig) -> MCEstimate:
    """E[s_lambda(H)] over GUE."""
    config = _with_kind(config, EnsembleKind.GUE)
    d = max(lam.weight, 1)

    def evaluate(rng: np.random.Generator, count: int) -> np.ndarray:
        return schur_of_power_sum_array(lam, batched_power_sums(gue_batch(rng, config, count), d))

    return run_chunks(config, samples, evaluate)


def normal_second_moment(N: int) -> float:
    """
    E[tr M M^dag] = E[sum |z_i|^2] under prod|z_i - z_j|^2 prod exp(-(N/2)|z_i|^2).

    The monomials z^j are orthogonal for the radial weight, so the sum splits
    into ratios of radial moments, j = 0..N-1.
    """
    if N < 1:
        raise InvalidInputError(f"N must be positive, got {N}")

    def radial(power: int) -> float:
        value, _ = quad(lambda r: r ** power * np.exp(-N * r * r / 2.0) * r, 0.0, np.inf)
        return value

    return float(sum(radial(2 * j + 2) / radial(2 * j) for j in range(N)))


def mc_normal_trace_moment(samples: int, config: EnsembleConfig) -> MCEstimate:
    config = _with_kind(config, EnsembleKind.NORMAL)
    return mc_observable(
        config,
        samples,
        lambda M: np.real(np.einsum("bij,bij->b", M, np.conj(M))).astype(complex),
    )
