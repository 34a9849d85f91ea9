import logging
import time
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterator, Optional

from src.exceptions import BrickworkError
from src.models.schemas import CheckResult, EnsembleConfig, EnsembleKind, MCEstimate, SuiteReport, VerificationOptions, format_rational

logger = logging.getLogger(__name__)


class BaseSuite(ABC):
    """
    Abstract base class for all verification suites.
    Handles timing, error capture and the exact / Monte Carlo comparison rules.
    """

    def __init__(self, name: str, options: Optional[VerificationOptions] = None):
        self.name = name
        self.options = options or VerificationOptions()

    @abstractmethod
    def get_description(self) -> str:
        """One line shown in the pass/fail table."""
        pass

    @abstractmethod
    def checks(self) -> Iterator[CheckResult]:
        """Yields every check of the suite."""
        pass

    def ensemble(self, N: int, kind: EnsembleKind = EnsembleKind.GUE, offset: int = 0) -> EnsembleConfig:
        return EnsembleConfig(N=N, kind=kind, seed=self.options.seed + offset, workers=self.options.workers)

    @staticmethod
    def exact(name: str, measured, expected) -> CheckResult:
        measured, expected = Fraction(measured), Fraction(expected)
        return CheckResult(
            name=name,
            measured=format_rational(measured),
            expected=format_rational(expected),
            passed=measured == expected,
        )

    @staticmethod
    def statistical(name: str, estimate: MCEstimate, expected: complex, sigmas: float = 4.0) -> CheckResult:
        return CheckResult(
            name=name,
            measured=f"{estimate.mean:.6g} +/- {estimate.standard_error:.3g}",
            expected=f"{complex(expected):.6g}",
            tolerance=f"{sigmas:g} SE",
            passed=estimate.agrees_with(expected, sigmas),
        )

    @staticmethod
    def bound(name: str, measured: float, limit: float) -> CheckResult:
        return CheckResult(name=name, measured=f"{measured:.3g}", expected=f"< {limit:g}", tolerance="bound",
                           passed=measured < limit)

    def run(self) -> SuiteReport:
        start = time.perf_counter()
        results = []
        error = None
        try:
            for check in self.checks():
                if not check.passed:
                    logger.warning("[%s] %s: measured %s, expected %s", self.name, check.name, check.measured, check.expected)
                results.append(check)
        except BrickworkError as e:
            logger.error("[%s] aborted: %s", self.name, e)
            error = str(e)
        return SuiteReport(
            suite=self.name,
            passed=error is None and all(c.passed for c in results),
            checks=results,
            runtime_seconds=time.perf_counter() - start,
            error=error,
        )
