from fractions import Fraction
from math import factorial
from typing import Iterator, Optional

from src.combinatorics.characters import CharacterTable
from src.combinatorics.partitions import dimension, enumerate_partitions, z_of
from src.config import get_settings
from src.models.db import CharacterStore
from src.models.schemas import CheckResult, VerificationOptions
from src.suites.base_suite import BaseSuite

ORTHOGONALITY_DEGREE = 8
DIMENSION_DEGREE = 10


class CharactersSuite(BaseSuite):
    """
    Row and column orthogonality of the character tables, and sum of dim^2 = d!.
    """

    def __init__(self, options: Optional[VerificationOptions] = None, store: Optional[CharacterStore] = None):
        super().__init__(name="characters", options=options)
        self.store = store if store is not None else CharacterStore.from_settings(get_settings())

    def get_description(self) -> str:
        return f"character orthogonality for d <= {ORTHOGONALITY_DEGREE}, dimensions for d <= {DIMENSION_DEGREE}"

    def checks(self) -> Iterator[CheckResult]:
        for d in range(1, ORTHOGONALITY_DEGREE + 1):
            table = CharacterTable.build(d, store=self.store)
            parts = enumerate_partitions(d)
            rows_bad = sum(
                1
                for lam in parts
                for nu in parts
                if sum((table[lam, mu] * table[nu, mu] / z_of(mu) for mu in parts), Fraction(0)) != (lam == nu)
            )
            yield self.exact(f"row orthogonality d={d}", rows_bad, 0)
            cols_bad = sum(
                1
                for mu in parts
                for nu in parts
                if sum(table[lam, mu] * table[lam, nu] for lam in parts) != (z_of(mu) if mu == nu else 0)
            )
            yield self.exact(f"column orthogonality d={d}", cols_bad, 0)
        for d in range(1, DIMENSION_DEGREE + 1):
            yield self.exact(f"sum dim^2 = d! for d={d}", sum(dimension(lam) ** 2 for lam in enumerate_partitions(d)), factorial(d))
