import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from src.combinatorics.partitions import Partition, class_size, dimension, enumerate_partitions
from src.exceptions import IncompatibleWeightsError

logger = logging.getLogger(__name__)


def _to_beta(lam: Tuple[int, ...]) -> List[int]:
    length = len(lam)
    return [part + (length - 1 - i) for i, part in enumerate(lam)]


def _from_beta(beta: List[int]) -> Tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(p for p in (b - (length - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    """
    Murnaghan-Nakayama on beta-numbers: removing a border strip of length r is
    sliding one bead from b to b - r onto a free position; the strip height is
    the number of beads jumped over.
    """
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _to_beta(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = [target if c == b else c for c in beta]
        sign = -1 if height % 2 else 1
        total += sign * _murnaghan_nakayama(_from_beta(moved), rest)
    return total


def character(lam: Partition, mu: Partition) -> Fraction:
    """chi_lambda(mu), integer valued, returned as an exact rational."""
    if lam.weight != mu.weight:
        raise IncompatibleWeightsError(f"|lambda|={lam.weight}, |mu|={mu.weight}")
    return Fraction(_murnaghan_nakayama(tuple(lam), tuple(sorted(mu, reverse=True))))


def normalized_character(lam: Partition, mu: Partition) -> Fraction:
    """phi_lambda(mu) = |C_mu| chi_lambda(mu) / dim lambda."""
    return class_size(mu) * character(lam, mu) / dimension(lam)


def clear_character_cache() -> None:
    _murnaghan_nakayama.cache_clear()


class CharacterTable:
    """Full character table of S_d, rows and columns in reverse-lex order."""

    def __init__(self, degree: int, values: Dict[Tuple[Partition, Partition], Fraction]):
        self.degree = degree
        self.values = values
        self.partitions = enumerate_partitions(degree)

    @classmethod
    def build(cls, degree: int, store=None) -> "CharacterTable":
        """Compute the table, reading and writing the on-disk store when one is given."""
        if store is not None:
            cached = store.load(degree)
            if cached is not None:
                logger.debug("Character table for S_%d loaded from cache", degree)
                return cls(degree, cached)
        parts = enumerate_partitions(degree)
        values = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
        table = cls(degree, values)
        if store is not None:
            store.save(table)
        return table

    def __getitem__(self, key: Tuple[Partition, Partition]) -> Fraction:
        return self.values[key]

    def row(self, lam: Partition) -> List[Fraction]:
        return [self.values[(lam, mu)] for mu in self.partitions]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "rows": [lam.encode() for lam in self.partitions],
            "columns": [mu.encode() for mu in self.partitions],
            "values": [[int(v) for v in self.row(lam)] for lam in self.partitions],
        }
