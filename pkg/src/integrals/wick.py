"""
Exact Gaussian expectations by Wick's theorem.

Every matrix factor H_{i j} in a product of traces carries a row and a column
index variable. Traces glue the column of one factor to the row of the next;
a pairing of two factors of the same matrix glues row to column crosswise,
E[H_ab H_cd] = delta_ad delta_bc / N. The value of a pairing is N to the
number of free index loops that remain, divided by N per pair.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Tuple

from src.combinatorics.characters import character
from src.combinatorics.partitions import Partition, content_product, enumerate_partitions, z_of
from src.combinatorics.schur import brick_specialization
from src.exceptions import EnumerationCapError, InvalidInputError

# Factors of one matrix that may be paired; 8 factors is 105 pairings.
WICK_FACTOR_CAP = 8


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def components(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})


def pairings(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    """All perfect matchings of the given points."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for more in pairings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + more


def _trace_layout(mu: Partition, n: int) -> Tuple[List[int], List[int]]:
    """
    Lay out prod_i tr (H_1 ... H_n)^{mu_i} as a flat list of factors.
    Returns (label of each factor, position of the next factor in its trace).
    """
    labels, successor = [], []
    for part in mu:
        start = len(labels)
        length = part * n
        for j in range(length):
            labels.append(j % n)
            successor.append(start + (j + 1) % length)
    return labels, successor


def _product_of_pairings(groups: List[List[int]]) -> Iterator[List[Tuple[int, int]]]:
    if not groups:
        yield []
        return
    for head in pairings(groups[0]):
        for tail in _product_of_pairings(groups[1:]):
            yield head + tail


@lru_cache(maxsize=None)
def word_moment(mu: Partition, N: int, n: int = 1) -> Fraction:
    """Exact E[prod_i tr (H_1 ... H_n)^{mu_i}] for independent GUE(1/N) matrices H_1..H_n."""
    if N < 1 or n < 1:
        raise InvalidInputError(f"need N >= 1 and n >= 1, got N={N}, n={n}")
    if mu.weight % 2:
        return Fraction(0)
    if mu.weight > WICK_FACTOR_CAP:
        raise EnumerationCapError(mu.weight, WICK_FACTOR_CAP)
    labels, successor = _trace_layout(mu, n)
    size = len(labels)
    groups = [[f for f in range(size) if labels[f] == label] for label in range(n)]
    # index variables: row of factor f is 2f, column is 2f + 1
    total = Fraction(0)
    for pairing in _product_of_pairings(groups):
        uf = _UnionFind(2 * size)
        for f in range(size):
            uf.union(2 * f + 1, 2 * successor[f])
        for f, g in pairing:
            uf.union(2 * f, 2 * g + 1)
            uf.union(2 * f + 1, 2 * g)
        total += Fraction(N) ** (uf.components() - len(pairing))
    return total


def wick_expectation(mu: Partition, N: int) -> Fraction:
    """E[prod_i tr H^{mu_i}] over GUE with E[H_ij H_kl] = delta_il delta_jk / N."""
    return word_moment(mu, N, 1)


@lru_cache(maxsize=None)
def gaussian_schur_average(lam: Partition, N: int) -> Fraction:
    """<s_lambda(H)> = sum_mu chi_lambda(mu) E[p_mu(H)] / z_mu, straight from the Wick oracle."""
    if lam.weight > WICK_FACTOR_CAP:
        raise EnumerationCapError(lam.weight, WICK_FACTOR_CAP)
    if lam.weight % 2:
        return Fraction(0)
    return sum(
        (character(lam, mu) * wick_expectation(mu, N) / z_of(mu) for mu in enumerate_partitions(lam.weight)),
        Fraction(0),
    )


def closed_form_schur_average(lam: Partition, N: int) -> Fraction:
    """(N)_lambda * s_lambda(0, 1/N, 0, ...), which the Wick oracle reproduces exactly."""
    return content_product(lam, N) * brick_specialization(lam, Fraction(1, N))


def schur_average(lam: Partition, N: int) -> Fraction:
    """<s_lambda(H)> from the Wick oracle where it is enumerable, from the closed form beyond."""
    if lam.weight <= WICK_FACTOR_CAP:
        return gaussian_schur_average(lam, N)
    return closed_form_schur_average(lam, N)
