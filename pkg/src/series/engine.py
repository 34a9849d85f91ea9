"""
Coefficients of the product-matrix model

    J_N(p) = < exp( N sum_m p_m tr (H_1 C_1 ... H_n C_n)^m / m ) >

in three forms: direct Wick expansion, the Schur sum over lambda, and the
Hurwitz sum over kappa. All arithmetic is exact at a concrete integer N.
"""
import itertools
import logging
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.combinatorics.characters import character
from src.combinatorics.hurwitz import brickwork_hurwitz, hurwitz_from_profiles
from src.combinatorics.partitions import Partition, dimension, enumerate_partitions, z_of
from src.combinatorics.permutations import resolve_cap
from src.combinatorics.schur import principal_specialization, schur_of_spectrum
from src.exceptions import (
    CalibrationError,
    EnumerationCapError,
    IncompatibleWeightsError,
    InvalidInputError,
    ValidityWindowError,
)
from src.integrals.wick import schur_average, word_moment
from src.models.schemas import (
    ModelKind,
    ModelSpec,
    NormalCoefficient,
    NormalProportionalityReport,
    Representation,
    SeriesCoefficient,
    SeriesDocument,
    format_rational,
)

logger = logging.getLogger(__name__)

# Direct Wick expansion with two or more random factors stops here.
MULTI_FACTOR_MOMENT_CAP = 4


def reverse_lex_key(p: Optional[Partition]) -> Tuple[int, ...]:
    return tuple(-part for part in p) if p is not None else ()


def _half_degree(mu: Partition) -> Optional[int]:
    return None if mu.weight % 2 else mu.weight // 2


def _check_window(model: ModelSpec, k: int, ignore_window: bool) -> bool:
    """True when the term lies outside 2k <= N and the caller asked to compute anyway."""
    if 2 * k <= model.N:
        return False
    if not ignore_window:
        raise ValidityWindowError(f"outside validity window: degree {2 * k} > N={model.N}")
    logger.warning("Computing degree %d at N=%d outside the validity window", 2 * k, model.N)
    return True


def _require_identity(model: ModelSpec, operation: str) -> None:
    if not model.is_identity:
        raise InvalidInputError(f"{operation} needs identity sources; use the source coefficients instead")


def _require_hermitian(model: ModelSpec, operation: str) -> None:
    if model.kind != ModelKind.HERMITIAN:
        raise InvalidInputError(f"{operation} is defined for the hermitian product model")


def _split_factor(lam: Partition, model: ModelSpec) -> Fraction:
    """(<s_lambda(H)> / s_lambda(I_N))^n."""
    return (schur_average(lam, model.N) / principal_specialization(lam, model.N)) ** model.n


def moment_coefficient(model: ModelSpec, mu: Partition) -> Fraction:
    """N^{l(mu)} / z_mu * E[prod_i tr W^{mu_i}] by multi-matrix Wick enumeration."""
    _require_hermitian(model, "moment_coefficient")
    _require_identity(model, "moment_coefficient")
    if mu.weight % 2:
        return Fraction(0)
    if model.n >= 2 and mu.weight > MULTI_FACTOR_MOMENT_CAP:
        raise EnumerationCapError(mu.weight, MULTI_FACTOR_MOMENT_CAP)
    return Fraction(model.N) ** mu.length / z_of(mu) * word_moment(mu, model.N, model.n)


def schur_sum_coefficient(model: ModelSpec, mu: Partition) -> Fraction:
    """
    Coefficient of p_mu in sum_lambda s_lambda(I_N) s_lambda(Np) (<s_lambda>/s_lambda(I_N))^n,
    restricted to l(lambda) <= N.
    """
    _require_hermitian(model, "schur_sum_coefficient")
    _require_identity(model, "schur_sum_coefficient")
    if mu.weight % 2:
        return Fraction(0)
    N = model.N
    extract = Fraction(N) ** mu.length / z_of(mu)
    total = Fraction(0)
    for lam in enumerate_partitions(mu.weight):
        if lam.length > N:
            continue
        chi = character(lam, mu)
        if chi:
            total += principal_specialization(lam, N) * chi * extract * _split_factor(lam, model)
    return total


def hurwitz_sum_coefficient(model: ModelSpec, mu: Partition, ignore_window: bool = False) -> Fraction:
    """sum_kappa N^{l(kappa) + alpha} H(kappa, mu, (2^k), ..., (2^k)) with the model's exponent rule."""
    _require_hermitian(model, "hurwitz_sum_coefficient")
    _require_identity(model, "hurwitz_sum_coefficient")
    k = _half_degree(mu)
    if k is None:
        return Fraction(0)
    _check_window(model, k, ignore_window)
    N = Fraction(model.N)
    alpha = model.normalization.exponent(model.n, k, mu)
    return sum(
        (N ** (kappa.length + alpha) * brickwork_hurwitz(kappa, mu, model.n) for kappa in enumerate_partitions(mu.weight)),
        Fraction(0),
    )


def hurwitz_raw_sum(N: int, n: int, mu: Partition) -> Fraction:
    """The Hurwitz form with no exponent correction at all."""
    return sum(
        (Fraction(N) ** kappa.length * brickwork_hurwitz(kappa, mu, n) for kappa in enumerate_partitions(mu.weight)),
        Fraction(0),
    )


def source_power_sum(model: ModelSpec, kappa: Partition) -> complex:
    """p_kappa(C) = prod_i tr C^{kappa_i} from the stored spectrum."""
    z = model.spectrum
    return complex(np.prod([np.sum(z ** part) for part in kappa])) if kappa else 1 + 0j


def source_coefficient(model: ModelSpec, kappa: Partition, mu: Partition, ignore_window: bool = False) -> Fraction:
    """Coefficient of p_kappa(C) p_mu: N^alpha H(kappa, mu, (2^k), ..., (2^k))."""
    _require_hermitian(model, "source_coefficient")
    if kappa.weight != mu.weight:
        raise IncompatibleWeightsError(f"|kappa|={kappa.weight}, |mu|={mu.weight}")
    k = _half_degree(mu)
    if k is None:
        raise InvalidInputError("brickwork requires even degree")
    _check_window(model, k, ignore_window)
    alpha = model.normalization.exponent(model.n, k, mu)
    return Fraction(model.N) ** alpha * brickwork_hurwitz(kappa, mu, model.n)


def schur_source_coefficient(model: ModelSpec, kappa: Partition, mu: Partition) -> Fraction:
    """Coefficient of p_kappa(C) p_mu in sum_lambda s_lambda(C) s_lambda(Np) (<s_lambda>/s_lambda(I_N))^n."""
    _require_hermitian(model, "schur_source_coefficient")
    if kappa.weight != mu.weight:
        raise IncompatibleWeightsError(f"|kappa|={kappa.weight}, |mu|={mu.weight}")
    if mu.weight % 2:
        return Fraction(0)
    N = model.N
    extract = Fraction(N) ** mu.length / (z_of(mu) * z_of(kappa))
    total = Fraction(0)
    for lam in enumerate_partitions(mu.weight):
        if lam.length > N:
            continue
        total += character(lam, kappa) * character(lam, mu) * extract * _split_factor(lam, model)
    return total


def source_series_term(model: ModelSpec, mu: Partition, ignore_window: bool = False) -> Tuple[complex, complex]:
    """
    The p_mu coefficient of J_N(p, C) evaluated at the stored spectrum, as
    (sum_kappa source_coefficient * p_kappa(C), Schur sum with s_lambda(C)).
    """
    _require_hermitian(model, "source_series_term")
    if mu.weight % 2:
        return 0j, 0j
    hurwitz_form = sum(
        (
            float(source_coefficient(model, kappa, mu, ignore_window)) * source_power_sum(model, kappa)
            for kappa in enumerate_partitions(mu.weight)
        ),
        0j,
    )
    N = model.N
    extract = float(Fraction(N) ** mu.length / z_of(mu))
    schur_form = 0j
    for lam in enumerate_partitions(mu.weight):
        if lam.length > N:
            continue
        chi = character(lam, mu)
        if chi:
            schur_form += schur_of_spectrum(lam, model.spectrum) * float(chi) * extract * float(_split_factor(lam, model))
    return hurwitz_form, schur_form


def _check_normal_profiles(model: ModelSpec, kappa: Partition, mu: Partition, ts: Sequence[Partition]) -> int:
    if model.n < 1 or len(ts) != model.n:
        raise InvalidInputError(f"expected {model.n} profiles t, got {len(ts)}")
    weights = {p.weight for p in [kappa, mu, *ts]}
    if len(weights) != 1:
        raise IncompatibleWeightsError(f"weights {sorted(weights)}")
    d = weights.pop()
    if d % 2:
        raise InvalidInputError("brickwork requires even degree")
    cap = resolve_cap()
    if d > cap:
        raise EnumerationCapError(d, cap)
    return d // 2


def normal_lambda_sum(kappa: Partition, mu: Partition, ts: Sequence[Partition], n: int) -> Fraction:
    """Coefficient of p_kappa(C) p_mu prod t^(i) in sum_lambda s_lambda(C) s_lambda(1,0,...)^{1-n} s_lambda(p) prod s_lambda(t^(i))."""
    d = mu.weight
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        term = Fraction(dimension(lam), factorial(d)) ** (1 - n)
        for nu in [kappa, mu, *ts]:
            term *= character(lam, nu) / z_of(nu)
            if not term:
                break
        total += term
    return total


def normal_model_coefficient(
    model: ModelSpec, kappa: Partition, mu: Partition, ts: Sequence[Partition]
) -> NormalCoefficient:
    """
    Frobenius form H(kappa, mu, t^(1), ..., t^(n), (2^k)^n) of the normal-matrix
    coefficient, with the lambda-sum value carried next to it.
    """
    k = _check_normal_profiles(model, kappa, mu, ts)
    profiles = [kappa, mu, *ts] + [Partition.brick(k)] * model.n
    return NormalCoefficient(
        kappa=kappa,
        mu=mu,
        ts=list(ts),
        frobenius=format_rational(hurwitz_from_profiles(profiles)),
        schur=format_rational(normal_lambda_sum(kappa, mu, ts, model.n)),
    )


def check_normal_proportionality(model: ModelSpec, k: int, strict: bool = False) -> NormalProportionalityReport:
    """Whether the Frobenius and lambda-sum forms differ by one constant over every key of degree 2k."""
    if model.n < 1:
        raise InvalidInputError("the normal model needs at least one factor")
    parts = enumerate_partitions(2 * k)
    coefficients = [
        normal_model_coefficient(model, kappa, mu, list(ts))
        for kappa in parts
        for mu in parts
        for ts in itertools.product(parts, repeat=model.n)
    ]
    constant: Optional[Fraction] = None
    for c in coefficients:
        if Fraction(c.schur):
            constant = Fraction(c.frobenius) / Fraction(c.schur)
            break
    mismatches = []
    for c in coefficients:
        frob, schur = Fraction(c.frobenius), Fraction(c.schur)
        expected = constant * schur if constant is not None else Fraction(0)
        c.proportional = frob == expected
        if not c.proportional:
            mismatches.append(c)
    report = NormalProportionalityReport(
        n=model.n,
        k=k,
        N=model.N,
        proportional=not mismatches,
        constant=format_rational(constant) if constant is not None and not mismatches else None,
        mismatches=mismatches,
    )
    if mismatches:
        logger.warning("Normal model at n=%d, k=%d: %d keys break proportionality", model.n, k, len(mismatches))
        if strict:
            raise CalibrationError(
                f"no consistent calibration for the normal model at n={model.n}, k={k}",
                table=[m.model_dump(mode="json") for m in mismatches],
            )
    return report


def _entry(degree: int, mu: Partition, value: Fraction, repr: Representation, **extra) -> SeriesCoefficient:
    return SeriesCoefficient(degree=degree, mu=mu, value=format_rational(value), repr=repr, **extra)


def _hermitian_terms(
    model: ModelSpec, mu: Partition, reprs: Iterable[Representation], ignore_window: bool
) -> List[SeriesCoefficient]:
    d = mu.weight
    out = []
    outside = 2 * (d // 2) > model.N
    kappas = enumerate_partitions(d)
    for r in reprs:
        if r == Representation.MOMENT:
            if model.is_identity:
                out.append(_entry(d, mu, moment_coefficient(model, mu), r))
            else:
                logger.info("Skipping moment form: no exact moments with a source spectrum")
        elif r == Representation.SCHUR:
            if model.is_identity:
                out.append(_entry(d, mu, schur_sum_coefficient(model, mu), r))
            else:
                out.extend(
                    _entry(d, mu, schur_source_coefficient(model, kappa, mu), r, kappa=kappa) for kappa in kappas
                )
        elif r == Representation.HURWITZ and model.is_identity:
            out.append(_entry(d, mu, hurwitz_sum_coefficient(model, mu, ignore_window), r, outside_window=outside))
        else:
            out.extend(
                _entry(
                    d, mu, source_coefficient(model, kappa, mu, ignore_window), Representation.SOURCE,
                    kappa=kappa, outside_window=outside,
                )
                for kappa in kappas
            )
    return out


def _normal_terms(model: ModelSpec, d: int, reprs: Iterable[Representation]) -> List[SeriesCoefficient]:
    parts = enumerate_partitions(d)
    out = []
    for kappa, mu in itertools.product(parts, repeat=2):
        for ts in itertools.product(parts, repeat=model.n):
            c = normal_model_coefficient(model, kappa, mu, list(ts))
            for r in reprs:
                if r == Representation.SCHUR:
                    value = c.schur
                elif r in (Representation.HURWITZ, Representation.SOURCE):
                    value = c.frobenius
                else:
                    continue
                out.append(_entry(d, mu, Fraction(value), r, kappa=kappa, profiles=list(ts)))
    return out


def build_series(
    model: ModelSpec,
    max_degree: int,
    reprs: Sequence[Representation] = (Representation.MOMENT, Representation.SCHUR, Representation.HURWITZ),
    ignore_window: bool = False,
) -> SeriesDocument:
    """All non-zero-degree coefficients up to max_degree, sorted by (degree, reverse-lex keys)."""
    if max_degree < 0:
        raise InvalidInputError(f"max degree must be non-negative, got {max_degree}")
    reprs = list(dict.fromkeys(reprs))
    coefficients: List[SeriesCoefficient] = []
    for d in range(2, max_degree + 1, 2):
        if model.kind == ModelKind.NORMAL:
            coefficients.extend(_normal_terms(model, d, reprs))
            continue
        for mu in enumerate_partitions(d):
            coefficients.extend(_hermitian_terms(model, mu, reprs, ignore_window))
    order = {r: i for i, r in enumerate(Representation)}
    coefficients.sort(
        key=lambda c: (
            c.degree,
            reverse_lex_key(c.mu),
            reverse_lex_key(c.kappa),
            tuple(reverse_lex_key(t) for t in c.profiles or []),
            order[c.repr],
        )
    )
    return SeriesDocument(model=model, coefficients=coefficients)
