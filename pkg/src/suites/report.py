from typing import Dict, List

from src import __version__
from src.models.schemas import SuiteReport, VerificationOptions, VerificationReport


class ReportBuilder:
    """
    Collects the per-suite reports into the final verification document.
    """

    def __init__(self, order: List[str]):
        self.order = order

    def finalize(self, suite_reports: Dict[str, SuiteReport], options: VerificationOptions) -> VerificationReport:
        suites = [suite_reports[name] for name in self.order if name in suite_reports]
        return VerificationReport(
            version=__version__,
            options=options,
            suites=suites,
            passed=bool(suites) and all(s.passed for s in suites),
        )

    @staticmethod
    def failed_checks(report: VerificationReport) -> List[str]:
        return [f"{s.suite}: {c.name}" for s in report.suites for c in s.checks if not c.passed] + [
            f"{s.suite}: {s.error}" for s in report.suites if s.error
        ]
