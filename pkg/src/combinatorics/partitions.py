"""
Integer partitions and the Young-diagram statistics the rest of the engine needs:
hooks, contents, conjugates, class sizes, z_mu and dimensions.
"""
from functools import lru_cache
from math import factorial, prod
from typing import Any, Iterable, List, Tuple

from pydantic_core import core_schema

from src.exceptions import InvalidInputError


class Partition(tuple):
    """
    A weakly decreasing tuple of positive integers.

    Partitions index irreducible representations of S_d, conjugacy classes
    and ramification profiles alike. Equality and hashing are those of the
    underlying tuple, so partitions work as dictionary keys.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise InvalidInputError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order (zeros dropped)."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the canonical encoding "2,1,1"; "0" (or "") is the empty partition."""
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            return cls.from_parts(int(t) for t in text.split(","))
        except ValueError as e:
            raise InvalidInputError(f"cannot parse partition '{text}': {e}") from e

    @classmethod
    def brick(cls, k: int) -> "Partition":
        """The profile (2^k) of a fixed-point-free involution in S_2k."""
        return cls((2,) * k)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict:
        counts: dict = {}
        for p in self:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def cells(self) -> List[Tuple[int, int]]:
        """Cells (i, j) of the Young diagram, 1-based."""
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def encode(self) -> str:
        return ",".join(str(p) for p in self) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({self.encode()})"

    @classmethod
    def coerce(cls, value: Any) -> "Partition":
        if isinstance(value, Partition):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls.from_parts(value)

    @classmethod
    def __get_pydantic_core_schema__(cls, source: Any, handler: Any) -> core_schema.CoreSchema:
        # Accepted as "2,1,1" or [2, 1, 1]; always serialized to the canonical string.
        return core_schema.no_info_plain_validator_function(
            cls.coerce,
            serialization=core_schema.plain_serializer_function_ser_schema(lambda p: p.encode()),
        )

    @classmethod
    def __get_pydantic_json_schema__(cls, schema: Any, handler: Any) -> dict:
        return {"type": "string", "pattern": r"^(0|[1-9]\d*(,[1-9]\d*)*)$", "examples": ["2,1,1"]}


def _partitions_bounded(d: int, largest: int) -> List[Tuple[int, ...]]:
    if d == 0:
        return [()]
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _enumerate(d: int) -> Tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(d, d))


def enumerate_partitions(d: int) -> List[Partition]:
    """All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1^d)."""
    if d < 0:
        raise InvalidInputError(f"cannot partition a negative integer: {d}")
    return list(_enumerate(d))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition(())
    return Partition(sum(1 for row in lam if row >= j) for j in range(1, lam[0] + 1))


@lru_cache(maxsize=None)
def hook_product(lam: Partition) -> int:
    lam_t = conjugate(lam)
    return prod(lam[i - 1] - j + lam_t[j - 1] - i + 1 for i, j in lam.cells())


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    return factorial(lam.weight) // hook_product(lam)


@lru_cache(maxsize=None)
def z_of(mu: Partition) -> int:
    # z_mu = prod_i i^{m_i} m_i!
    return prod(part ** m * factorial(m) for part, m in mu.multiplicities().items())


@lru_cache(maxsize=None)
def class_size(mu: Partition) -> int:
    return factorial(mu.weight) // z_of(mu)


def content_product(lam: Partition, N: int) -> int:
    """(N)_lambda = prod over cells of (N + j - i)."""
    return prod(N + j - i for i, j in lam.cells())

