"""
Schur functions through the character map

    s_lambda(p) = sum_{mu |- |lambda|} chi_lambda(mu) p_mu / z_mu,

evaluated either exactly (Fraction power sums) or in complex floating point
(power sums of numeric matrices). Both go through the same code path.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Dict, Iterable, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator

from src.combinatorics.characters import character
from src.combinatorics.partitions import (
    Partition,
    content_product,
    enumerate_partitions,
    hook_product,
    z_of,
)
from src.exceptions import InvalidInputError

Scalar = Union[Fraction, complex]


def _parse_scalar(text: str, exact: bool) -> Scalar:
    text = text.strip()
    return Fraction(text) if exact else complex(text.replace("i", "j"))


class PowerSumSpec(BaseModel):
    """
    A point p = (p_1, p_2, ...) given sparsely: absent keys are zero.

    With exact=True every value is a Fraction; otherwise every value is a
    complex double. Both instantiations go through the same evaluation code.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    exact: bool = True
    values: Dict[int, Any]

    @field_validator("values", mode="after")
    @classmethod
    def _normalize(cls, v: Dict[int, Any], info: ValidationInfo) -> Dict[int, Any]:
        if any(int(m) < 1 for m in v):
            raise ValueError(f"power-sum indices must be positive: {sorted(v)}")
        cast = Fraction if info.data.get("exact", True) else complex
        return {int(m): cast(val) for m, val in v.items()}

    @classmethod
    def exact_from(cls, values: Dict[int, Any]) -> "PowerSumSpec":
        return cls(values=values, exact=True)

    @classmethod
    def floating_from(cls, values: Dict[int, Any]) -> "PowerSumSpec":
        return cls(values=values, exact=False)

    @classmethod
    def parse(cls, text: str) -> "PowerSumSpec":
        """Parse "1:1,2:1/2" (exact) or "1:1,2:0.5" (floating, any decimal point or j)."""
        exact = not any(ch in text for ch in ".ej")
        values = {}
        for item in filter(None, (t.strip() for t in text.split(","))):
            try:
                key, val = item.split(":")
                values[int(key)] = _parse_scalar(val, exact)
            except ValueError as e:
                raise InvalidInputError(f"bad power-sum entry '{item}'") from e
        return cls(values=values, exact=exact)

    def get(self, m: int) -> Scalar:
        return self.values.get(m, Fraction(0) if self.exact else 0j)

    def p_mu(self, mu: Iterable[int]) -> Scalar:
        out: Scalar = Fraction(1) if self.exact else 1 + 0j
        for part in mu:
            if part not in self.values:
                return Fraction(0) if self.exact else 0j
            out *= self.values[part]
        return out

    def scaled(self, c: Scalar) -> "PowerSumSpec":
        """p_m -> c^m p_m (the substitution x -> c x in the underlying variables)."""
        return PowerSumSpec(values={m: c ** m * v for m, v in self.values.items()}, exact=self.exact)

    def times(self, c: Scalar) -> "PowerSumSpec":
        """p_m -> c p_m, e.g. the point N p."""
        return PowerSumSpec(values={m: c * v for m, v in self.values.items()}, exact=self.exact)

    def to_json(self) -> Dict[str, Any]:
        if self.exact:
            return {str(m): str(v) for m, v in sorted(self.values.items())}
        return {
            str(m): (v.real if v.imag == 0 else [v.real, v.imag])
            for m, v in sorted(self.values.items())
        }


@lru_cache(maxsize=None)
def _character_map_row(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    """Non-zero coefficients chi_lambda(mu)/z_mu of s_lambda in the p_mu basis."""
    row = []
    for mu in enumerate_partitions(lam.weight):
        chi = character(lam, mu)
        if chi:
            row.append((mu, chi / z_of(mu)))
    return tuple(row)


def schur_from_power_sums(lam: Partition, p: PowerSumSpec) -> Scalar:
    total: Scalar = Fraction(0) if p.exact else 0j
    for mu, coeff in _character_map_row(lam):
        value = p.p_mu(mu)
        if value:
            total += (coeff if p.exact else float(coeff)) * value
    return total


def principal_specialization(lam: Partition, N: int) -> Fraction:
    """s_lambda(I_N) = (N)_lambda / H(lambda); zero once l(lambda) > N."""
    return Fraction(content_product(lam, N), hook_product(lam))


def brick_specialization(lam: Partition, c: Scalar) -> Scalar:
    """s_lambda(0, c, 0, 0, ...)."""
    d = lam.weight
    if d % 2:
        return Fraction(0) if isinstance(c, (int, Fraction)) else 0j
    k = d // 2
    coeff = character(lam, Partition.brick(k)) / (2 ** k * factorial(k))
    if isinstance(c, (int, Fraction)):
        return coeff * Fraction(c) ** k
    return float(coeff) * c ** k


def _as_square(X: Any) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    if X.ndim < 2 or X.shape[-1] != X.shape[-2]:
        raise InvalidInputError(f"expected a square matrix, got shape {X.shape}")
    return X


def power_sums_of_matrix(X: Any, d: int) -> PowerSumSpec:
    """p_m = tr(X^m) for m = 1..d by repeated multiplication."""
    X = _as_square(X)
    if X.ndim != 2:
        raise InvalidInputError("power_sums_of_matrix takes a single matrix")
    values = {}
    power = np.eye(X.shape[0], dtype=complex)
    for m in range(1, d + 1):
        power = power @ X
        values[m] = complex(np.trace(power))
    return PowerSumSpec.floating_from(values)


def batched_power_sums(X: np.ndarray, d: int) -> np.ndarray:
    """Power sums of a stack of matrices: array of shape (batch, d) with column m-1 = tr X^m."""
    X = _as_square(X)
    out = np.empty(X.shape[:-2] + (d,), dtype=complex)
    power = np.broadcast_to(np.eye(X.shape[-1], dtype=complex), X.shape).copy()
    for m in range(d):
        power = power @ X
        out[..., m] = np.trace(power, axis1=-2, axis2=-1)
    return out


def schur_of_power_sum_array(lam: Partition, sums: np.ndarray) -> np.ndarray:
    """Vectorised floating character map over rows of a (batch, >=|lam|) power-sum array."""
    total = np.zeros(sums.shape[:-1], dtype=complex)
    for mu, coeff in _character_map_row(lam):
        term = np.full(sums.shape[:-1], float(coeff), dtype=complex)
        for part in mu:
            term = term * sums[..., part - 1]
        total += term
    return total


def schur_of_matrix(lam: Partition, X: Any) -> complex:
    X = _as_square(X)
    return complex(schur_from_power_sums(lam, power_sums_of_matrix(X, max(lam.weight, 1))))


def schur_of_spectrum(lam: Partition, eigenvalues: Iterable[complex]) -> complex:
    """s_lambda evaluated at a diagonal matrix with the given eigenvalues."""
    z = np.asarray(list(eigenvalues), dtype=complex)
    p = PowerSumSpec.floating_from({m: complex(np.sum(z ** m)) for m in range(1, lam.weight + 1)})
    return complex(schur_from_power_sums(lam, p))

