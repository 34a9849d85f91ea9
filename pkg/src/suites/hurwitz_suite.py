import itertools
from typing import Iterator, List, Optional, Sequence

from src.combinatorics.hurwitz import brickwork_hurwitz, hurwitz_from_profiles
from src.combinatorics.partitions import Partition, enumerate_partitions
from src.combinatorics.permutations import count_brickwork, count_factorizations
from src.models.schemas import CheckResult, VerificationOptions
from src.suites.base_suite import BaseSuite

# Degree 8 cases whose enumerated classes stay small.
DEGREE_EIGHT_SPOT_CHECKS = [
    "2,1,1,1,1,1,1;2,1,1,1,1,1,1",
    "2,1,1,1,1,1,1;2,1,1,1,1,1,1;2,2,1,1,1,1",
    "2,1,1,1,1,1,1;2,1,1,1,1,1,1;3,1,1,1,1,1",
    "2,1,1,1,1,1,1;3,1,1,1,1,1;2,2,1,1,1,1",
    "3,1,1,1,1,1;3,1,1,1,1,1;3,1,1,1,1,1",
    "3,1,1,1,1,1;3,1,1,1,1,1;3,3,1,1",
    "2,1,1,1,1,1,1;2,1,1,1,1,1,1;2,1,1,1,1,1,1;2,1,1,1,1,1,1",
    "2,1,1,1,1,1,1;2,1,1,1,1,1,1;4,2,2",
    "2,2,1,1,1,1;2,2,1,1,1,1;2,2,2,2",
    "2,1,1,1,1,1,1;2,2,1,1,1,1;3,2,1,1,1",
    "1,1,1,1,1,1,1,1;2,2,2,2;2,2,2,2",
    "2,1,1,1,1,1,1;3,1,1,1,1,1;4,1,1,1,1",
]


def parse_profiles(text: str) -> List[Partition]:
    return [Partition.parse(part) for part in text.split(";")]


def profile_lists(d: int, max_profiles: int) -> Iterator[List[Partition]]:
    """Every multiset of 1..max_profiles cycle types of S_d (the count is symmetric in the order)."""
    parts = enumerate_partitions(d)
    for m in range(1, max_profiles + 1):
        for combo in itertools.combinations_with_replacement(parts, m):
            yield list(combo)


def _label(profiles: Sequence[Partition]) -> str:
    return ";".join(p.encode() for p in profiles)


class HurwitzOracleSuite(BaseSuite):
    """
    Frobenius formula against brute-force factorization counts, then the
    brickwork table against the brickwork oracle.
    """

    def __init__(
        self,
        options: Optional[VerificationOptions] = None,
        exhaustive_degree: int = 6,
        exhaustive_profiles: int = 4,
        partial_degree: int = 7,
        partial_profiles: int = 2,
        brick_max_k: int = 3,
        brick_max_n: int = 3,
    ):
        super().__init__(name="hurwitz-vs-oracle", options=options)
        self.exhaustive_degree = exhaustive_degree
        self.exhaustive_profiles = exhaustive_profiles
        self.partial_degree = partial_degree
        self.partial_profiles = partial_profiles
        self.brick_max_k = brick_max_k
        self.brick_max_n = brick_max_n

    def get_description(self) -> str:
        return "Frobenius formula vs permutation counts; brickwork table vs oracle"

    def _compare(self, profiles: List[Partition]) -> CheckResult:
        d = profiles[0].weight
        return self.exact(
            f"H({_label(profiles)})",
            hurwitz_from_profiles(profiles),
            count_factorizations(profiles, d, cap=self.options.cap, workers=self.options.workers),
        )

    def checks(self) -> Iterator[CheckResult]:
        for d in range(1, self.exhaustive_degree + 1):
            for profiles in profile_lists(d, self.exhaustive_profiles):
                yield self._compare(profiles)
        for d in range(self.exhaustive_degree + 1, self.partial_degree + 1):
            for profiles in profile_lists(d, self.partial_profiles):
                yield self._compare(profiles)
        if self.options.cap is None or self.options.cap >= 8:
            for text in DEGREE_EIGHT_SPOT_CHECKS:
                yield self._compare(parse_profiles(text))
        for k in range(1, self.brick_max_k + 1):
            parts = enumerate_partitions(2 * k)
            for n in range(1, self.brick_max_n + 1):
                for kappa, mu in itertools.product(parts, repeat=2):
                    yield self.exact(
                        f"brickwork({kappa.encode()}; {mu.encode()}; n={n})",
                        brickwork_hurwitz(kappa, mu, n),
                        count_brickwork(kappa, mu, n, cap=self.options.cap, workers=self.options.workers),
                    )
        yield self.exact("anchor H((2),(1,1),(2))", brickwork_hurwitz(Partition((2,)), Partition((1, 1)), 1), "1/2")
        yield self.exact("anchor H((2),(2),(2))", brickwork_hurwitz(Partition((2,)), Partition((2,)), 1), 0)
