"""
Samplers for the four matrix ensembles.

All randomness comes from Philox streams spawned off one SeedSequence, one
stream per chunk of samples, so a (seed, chunk_size) pair fixes every draw
no matter how many threads consume the chunks.
"""
from typing import Callable, Dict, List, Optional

import numpy as np
from scipy.linalg import qr

from src.exceptions import InvalidInputError
from src.models.schemas import EnsembleConfig, EnsembleKind

Sampler = Callable[[np.random.Generator, EnsembleConfig, int], np.ndarray]


def chunk_streams(seed: int, n_chunks: int) -> List[np.random.Generator]:
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def chunk_sizes(samples: int, chunk_size: int) -> List[int]:
    if samples < 1:
        raise InvalidInputError(f"sample count must be positive, got {samples}")
    full, rest = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def stream_for(config: EnsembleConfig) -> np.random.Generator:
    """The first chunk stream of a config; used for one-off draws."""
    return chunk_streams(config.seed, 1)[0]


def complex_gaussian(rng: np.random.Generator, shape, variance: float) -> np.ndarray:
    """Entries with E|z|^2 = variance, real and imaginary parts independent."""
    scale = np.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def gue_batch(rng: np.random.Generator, config: EnsembleConfig, count: int) -> np.ndarray:
    N = config.N
    G = complex_gaussian(rng, (count, N, N), config.entry_variance)
    # diagonal ends up real with variance v, off-diagonal parts with v/2 each
    return (G + np.conj(np.swapaxes(G, -1, -2))) / np.sqrt(2.0)


def haar_batch(rng: np.random.Generator, config: EnsembleConfig, count: int) -> np.ndarray:
    N = config.N
    Z = complex_gaussian(rng, (count, N, N), 1.0)
    q, r = np.linalg.qr(Z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def ginibre_batch(rng: np.random.Generator, config: EnsembleConfig, count: int) -> np.ndarray:
    return complex_gaussian(rng, (count, config.N, config.N), config.entry_variance)


def normal_eigenvalue_variance(N: int) -> float:
    # Ginibre with weight exp(-(N/2) tr GG^dag) has eigenvalue weight exp(-(N/2)|z|^2)
    return 2.0 / N


def normal_batch(rng: np.random.Generator, config: EnsembleConfig, count: int) -> np.ndarray:
    N = config.N
    G = complex_gaussian(rng, (count, N, N), normal_eigenvalue_variance(N))
    z = np.linalg.eigvals(G)
    U = haar_batch(rng, config, count)
    return (U * z[..., None, :]) @ np.conj(np.swapaxes(U, -1, -2))


SAMPLERS: Dict[EnsembleKind, Sampler] = {
    EnsembleKind.GUE: gue_batch,
    EnsembleKind.HAAR_UNITARY: haar_batch,
    EnsembleKind.GINIBRE: ginibre_batch,
    EnsembleKind.NORMAL: normal_batch,
}


def draw(config: EnsembleConfig, rng: np.random.Generator, count: int) -> np.ndarray:
    return SAMPLERS[config.kind](rng, config, count)


def _require(config: EnsembleConfig, kind: EnsembleKind) -> None:
    if config.kind != kind:
        raise InvalidInputError(f"sampler for {kind.value} called with a {config.kind.value} config")


def sample_gue(config: EnsembleConfig, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """One Hermitian matrix from e^{-(N/2) tr H^2} (or unit variance when configured)."""
    _require(config, EnsembleKind.GUE)
    return gue_batch(rng or stream_for(config), config, 1)[0]


def sample_haar_unitary(config: EnsembleConfig, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    Haar unitary from the QR factorization of a complex Ginibre draw, with the
    phases of R's diagonal moved into Q.
    """
    _require(config, EnsembleKind.HAAR_UNITARY)
    rng = rng or stream_for(config)
    z = complex_gaussian(rng, (config.N, config.N), 1.0)
    q, r = qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def sample_normal_matrix(config: EnsembleConfig, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """M = U diag(z) U^dag with Haar U and z distributed as prod|z_i - z_j|^2 prod exp(-(N/2)|z_i|^2)."""
    _require(config, EnsembleKind.NORMAL)
    return normal_batch(rng or stream_for(config), config, 1)[0]
