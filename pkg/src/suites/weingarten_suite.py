import itertools
from fractions import Fraction
from typing import Iterator, Optional

from src.combinatorics.partitions import Partition
from src.integrals.monte_carlo import mc_weingarten_monomial
from src.integrals.weingarten import monomial_integral, weingarten_monomial, weingarten_value
from src.models.schemas import CheckResult, EnsembleKind, MonomialSpec, VerificationOptions
from src.suites.base_suite import BaseSuite

N_VALUES = (3, 4, 5)


def closed_forms(N: int) -> dict:
    """Wg_N for |mu| <= 2."""
    return {
        Partition((1,)): Fraction(1, N),
        Partition((1, 1)): Fraction(1, N * N - 1),
        Partition((2,)): Fraction(-1, N * (N * N - 1)),
    }


def mc_monomials() -> list:
    """(label, monomial) pairs of degree <= 3 for the Monte Carlo comparison."""
    cases = [
        ("|U11|^2, N=3", MonomialSpec(a=[1], b=[1], a_prime=[1], b_prime=[1], N=3)),
        ("U11, N=3", MonomialSpec(a=[1], b=[1], N=3)),
        ("|U11|^2 |U12|^2, N=4", MonomialSpec(a=[1, 1], b=[1, 2], a_prime=[1, 1], b_prime=[1, 2], N=4)),
        ("|U11|^4, N=3", MonomialSpec(a=[1, 1], b=[1, 1], a_prime=[1, 1], b_prime=[1, 1], N=3)),
        ("|U11 U22|^2, N=4", MonomialSpec(a=[1, 2], b=[1, 2], a_prime=[1, 2], b_prime=[1, 2], N=4)),
    ]
    for N in (3, 4):
        for sigma in itertools.permutations(range(3)):
            label = "".join(str(s + 1) for s in sigma)
            cases.append((f"Wg monomial sigma={label}, N={N}", weingarten_monomial(sigma, N)))
    return cases


class WeingartenSuite(BaseSuite):
    """
    Closed forms of Wg for small degree, unitarity row sums, and Collins'
    formula against Haar sampling.
    """

    def __init__(self, options: Optional[VerificationOptions] = None):
        super().__init__(name="weingarten", options=options)

    def get_description(self) -> str:
        return "Weingarten closed forms, unitarity sums, Monte Carlo monomials"

    def checks(self) -> Iterator[CheckResult]:
        for N in N_VALUES:
            for mu, expected in closed_forms(N).items():
                yield self.exact(f"Wg_{N}({mu.encode()})", weingarten_value(mu, N), expected)
        for N in N_VALUES:
            # sum_j |U_1j|^2 = 1
            row = sum(
                (monomial_integral(MonomialSpec(a=[1], b=[j], a_prime=[1], b_prime=[j], N=N)) for j in range(1, N + 1)),
                Fraction(0),
            )
            yield self.exact(f"row sum of |U_1j|^2, N={N}", row, 1)
            # sum_j |U_11|^2 |U_2j|^2 = E|U_11|^2
            row2 = sum(
                (
                    monomial_integral(MonomialSpec(a=[1, 2], b=[1, j], a_prime=[1, 2], b_prime=[1, j], N=N))
                    for j in range(1, N + 1)
                ),
                Fraction(0),
            )
            yield self.exact(f"row sum of |U_11 U_2j|^2, N={N}", row2, Fraction(1, N))
        samples = self.options.samples
        for offset, (label, m) in enumerate(mc_monomials()):
            estimate = mc_weingarten_monomial(m, samples, self.ensemble(m.N, EnsembleKind.HAAR_UNITARY, offset))
            yield self.statistical(label, estimate, complex(monomial_integral(m)))
