import logging
from typing import Any, Callable, Dict

from src.exceptions import InvalidInputError
from src.models.schemas import VerificationState
from src.suites import SUITES
from src.suites.report import ReportBuilder

logger = logging.getLogger(__name__)

report_builder = ReportBuilder(list(SUITES))


def plan_node(state: VerificationState) -> Dict[str, Any]:
    """Resolves the suite selection; an empty selection or "all" means every suite."""
    selected = [s for s in state.selected if s != "all"] or list(SUITES)
    unknown = [s for s in selected if s not in SUITES]
    if unknown:
        raise InvalidInputError(f"unknown suite(s) {unknown}; choose from {list(SUITES)}")
    logger.info("--- Planning: %s ---", ", ".join(selected))
    return {"selected": selected, "log": [f"planned {len(selected)} suite(s)"]}


def suite_node(name: str) -> Callable[[VerificationState], Dict[str, Any]]:
    def run_suite(state: VerificationState) -> Dict[str, Any]:
        if name not in state.selected:
            return {}
        logger.info("--- Running %s ---", name)
        report = SUITES[name](options=state.options).run()
        status = "passed" if report.passed else "FAILED"
        return {
            "suite_reports": {name: report},
            "log": [f"{name} {status} in {report.runtime_seconds:.1f}s"],
        }

    run_suite.__name__ = f"{name.replace('-', '_')}_node"
    return run_suite


def report_node(state: VerificationState) -> Dict[str, Any]:
    """Fan-in: assembles the verification report."""
    report = report_builder.finalize(state.suite_reports, state.options)
    logger.info("--- Report: %s ---", "passed" if report.passed else "failed")
    return {"report": report}
