"""
Pins the power of N that turns the raw Hurwitz sum into the true moment
coefficient, measured against the Wick expansion at several N.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from src.combinatorics.partitions import enumerate_partitions
from src.exceptions import CalibrationError, InvalidInputError
from src.models.schemas import CalibrationEntry, CalibrationReport, ModelKind, ModelSpec, format_rational
from src.series.engine import hurwitz_raw_sum, moment_coefficient

logger = logging.getLogger(__name__)

DEFAULT_N_VALUES = (3, 4, 5)


def power_of(ratio: Fraction, N: int) -> Optional[int]:
    """e with ratio == N**e, or None."""
    if ratio <= 0 or N < 2:
        return None
    e = 0
    num, den = ratio.numerator, ratio.denominator
    while num % N == 0 and num > 1:
        num //= N
        e += 1
    while den % N == 0 and den > 1:
        den //= N
        e -= 1
    return e if num == 1 and den == 1 else None


def _measure(model: ModelSpec, max_k: int, N_values: Sequence[int]) -> List[CalibrationEntry]:
    table = []
    for k in range(1, max_k + 1):
        for mu in enumerate_partitions(2 * k):
            for N in N_values:
                moment = moment_coefficient(model.with_N(N), mu)
                raw = hurwitz_raw_sum(N, model.n, mu)
                exponent = power_of(moment / raw, N) if raw and moment else None
                table.append(
                    CalibrationEntry(
                        n=model.n, k=k, N=N, mu=mu,
                        moment=format_rational(moment), hurwitz_raw=format_rational(raw), exponent=exponent,
                    )
                )
    return table


def _fit(table: List[CalibrationEntry], length_weight: int) -> Optional[Dict[str, int]]:
    """One beta per (n, k) with exponent == length_weight * l(mu) + beta, or None."""
    offsets: Dict[str, int] = {}
    for entry in table:
        moment, raw = Fraction(entry.moment), Fraction(entry.hurwitz_raw)
        if not moment and not raw:
            continue
        if entry.exponent is None:
            return None
        beta = entry.exponent - length_weight * entry.mu.length
        key = f"{entry.n},{entry.k}"
        if offsets.setdefault(key, beta) != beta:
            return None
    return offsets


def calibrate_normalization(
    model: ModelSpec, max_k: int, N_values: Sequence[int] = DEFAULT_N_VALUES
) -> CalibrationReport:
    """
    Measures alpha(n, k, mu) = w * l(mu) + beta(n, k) against moment_coefficient for
    every mu |- 2k, k <= max_k, at each N. The printed form (w = 0) is tried first.
    """
    if model.kind != ModelKind.HERMITIAN or not model.is_identity:
        raise InvalidInputError("calibration runs on the hermitian model with identity sources")
    if max_k < 1:
        raise InvalidInputError(f"max_k must be positive, got {max_k}")
    N_values = sorted(set(N_values))
    if len(N_values) < 3 or N_values[0] < 2:
        raise InvalidInputError(f"calibration needs at least three distinct N >= 2, got {N_values}")

    table = _measure(model, max_k, N_values)
    for length_weight in (0, 1):
        offsets = _fit(table, length_weight)
        if offsets is None:
            logger.info("No exponent rule with length weight %d for n=%d", length_weight, model.n)
            continue
        confirmed = length_weight == 0 and all(
            offsets.get(f"{model.n},{k}") == -(model.n - 1) * k for k in range(1, max_k + 1)
        )
        if not confirmed:
            logger.warning("Hypothesis beta(n, k) = -(n-1)k refuted for n=%d: %s (length weight %d)",
                           model.n, offsets, length_weight)
        return CalibrationReport(
            n=model.n,
            max_k=max_k,
            N_values=N_values,
            consistent=True,
            length_weight=length_weight,
            offsets=offsets,
            hypothesis_confirmed=confirmed,
            table=table,
        )
    raise CalibrationError(
        f"no consistent calibration for n={model.n} up to k={max_k}",
        table=[e.model_dump(mode="json") for e in table],
    )
