from fractions import Fraction
from math import factorial
from typing import Sequence

from src.combinatorics.characters import normalized_character
from src.combinatorics.partitions import Partition, dimension, enumerate_partitions
from src.exceptions import IncompatibleWeightsError, InvalidInputError
from src.models.schemas import BranchProfile


def frobenius_terms(profiles: Sequence[Partition], euler: int = 2) -> dict:
    """Per-lambda summands (dim/d!)^E prod phi_lambda(mu_i) of the Frobenius formula."""
    if not profiles:
        raise InvalidInputError("at least one branch profile is required")
    d = profiles[0].weight
    if any(p.weight != d for p in profiles):
        raise IncompatibleWeightsError(f"profile weights {[p.weight for p in profiles]}")
    terms = {}
    for lam in enumerate_partitions(d):
        term = Fraction(dimension(lam), factorial(d)) ** euler
        for mu in profiles:
            term *= normalized_character(lam, mu)
            if not term:
                break
        terms[lam] = term
    return terms


def hurwitz_number(profile: BranchProfile) -> Fraction:
    """
    Possibly-disconnected Hurwitz number via Frobenius:
    sum over lambda |- d of (dim lambda / d!)^E prod_i phi_lambda(mu^(i)).
    """
    return sum(frobenius_terms(profile.partitions, profile.euler).values(), Fraction(0))


def hurwitz_from_profiles(profiles: Sequence[Partition], euler: int = 2) -> Fraction:
    return sum(frobenius_terms(profiles, euler).values(), Fraction(0))


def brickwork_profiles(kappa: Partition, mu: Partition, n: int) -> list:
    if kappa.weight != mu.weight:
        raise IncompatibleWeightsError(f"|kappa|={kappa.weight}, |mu|={mu.weight}")
    if kappa.weight % 2:
        raise InvalidInputError("brickwork requires even degree")
    if n < 1:
        raise InvalidInputError(f"number of bricks must be positive, got {n}")
    return [kappa, mu] + [Partition.brick(kappa.weight // 2)] * n


def brickwork_hurwitz(kappa: Partition, mu: Partition, n: int) -> Fraction:
    """H_{S^2}(kappa, mu, (2^k), ..., (2^k)) with n brick profiles."""
    return hurwitz_from_profiles(brickwork_profiles(kappa, mu, n), euler=2)
