"""
Exact unitary Weingarten calculus at concrete N.

    Wg_N(mu) = sum_{lambda |- |mu|} (dim lambda / |lambda|!) chi_lambda(mu) / (N)_lambda

and Collins' formula for Haar averages of monomials in U and U^dag.
"""
import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from src.combinatorics.characters import character
from src.combinatorics.partitions import Partition, content_product, dimension, enumerate_partitions
from src.combinatorics.permutations import compose, cycle_type, inverse
from src.exceptions import WeingartenDomainError
from src.models.schemas import MonomialSpec

logger = logging.getLogger(__name__)

# Collins' double sum is enumerated explicitly over S_d x S_d up to this degree.
MAX_MONOMIAL_DEGREE = 6


@lru_cache(maxsize=None)
def _weingarten(mu: Partition, N: int) -> Fraction:
    d = mu.weight
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        if lam.length > N:
            continue
        total += Fraction(dimension(lam), factorial(d)) * character(lam, mu) / content_product(lam, N)
    return total


def weingarten_value(mu: Partition, N: int) -> Fraction:
    if N < mu.weight:
        raise WeingartenDomainError(f"Weingarten undefined below degree: N={N} < |mu|={mu.weight}")
    return _weingarten(mu, N)


def balance_numbers(m: MonomialSpec) -> Tuple[int, int]:
    """(A, B) = (sum a - sum a', sum b - sum b')."""
    return sum(m.a) - sum(m.a_prime), sum(m.b) - sum(m.b_prime)


def vanishes_by_balance(m: MonomialSpec) -> bool:
    """
    True when the integral is zero without summing: d != d', a non-zero
    balance number, or index multisets that admit no matching at all.
    """
    if m.d != m.d_prime:
        return True
    if balance_numbers(m) != (0, 0):
        return True
    return sorted(m.a) != sorted(m.a_prime) or sorted(m.b) != sorted(m.b_prime)


def _matching_permutations(left, right):
    """All sigma in S_d with left[k] == right[sigma(k)] for every k."""
    d = len(left)
    for sigma in itertools.permutations(range(d)):
        if all(left[k] == right[sigma[k]] for k in range(d)):
            yield sigma


def monomial_integral(m: MonomialSpec) -> Fraction:
    """
    Collins: delta_{d,d'} sum_{sigma, tau in S_d} Wg_N(tau sigma^{-1})
    prod_k delta(a_k, a'_sigma(k)) delta(b_k, b'_tau(k)).
    """
    if vanishes_by_balance(m):
        return Fraction(0)
    d = m.d
    if m.N < d:
        raise WeingartenDomainError(f"Weingarten undefined below degree: N={m.N} < d={d}")
    if d > MAX_MONOMIAL_DEGREE:
        logger.warning("Monomial of degree %d: enumerating %d! x %d! permutation pairs", d, d, d)
    sigmas = list(_matching_permutations(m.a, m.a_prime))
    taus = list(_matching_permutations(m.b, m.b_prime))
    total = Fraction(0)
    for sigma in sigmas:
        sigma_inv = inverse(sigma)
        for tau in taus:
            # tau sigma^{-1} as a map: apply sigma^{-1}, then tau
            total += _weingarten(cycle_type(compose(sigma_inv, tau)), m.N)
    return total


def weingarten_monomial(sigma: Tuple[int, ...], N: int) -> MonomialSpec:
    """U_{11} ... U_{dd} (U^dag)_{sigma(1),1} ... (U^dag)_{sigma(d),d}, whose integral is Wg_N(sigma)."""
    d = len(sigma)
    return MonomialSpec(
        a=list(range(1, d + 1)),
        b=list(range(1, d + 1)),
        a_prime=list(range(1, d + 1)),
        b_prime=[s + 1 for s in sigma],
        N=N,
    )
