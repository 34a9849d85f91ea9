from typing import Iterable, Optional

from langgraph.graph import END, StateGraph

from src.graph.nodes import plan_node, report_node, suite_node
from src.models.schemas import VerificationOptions, VerificationReport, VerificationState
from src.suites import SUITES


class VerificationOrchestrator:
    """
    Runs the acceptance suites through a LangGraph fan-out / fan-in.
    """

    def __init__(self):
        self.workflow = self._build_workflow()
        self.app = self.workflow.compile()

    def _build_workflow(self) -> StateGraph:
        """Constructs the state graph."""
        workflow = StateGraph(VerificationState)

        workflow.add_node("plan", plan_node)
        for name in SUITES:
            workflow.add_node(name, suite_node(name))
        workflow.add_node("build_report", report_node)

        workflow.set_entry_point("plan")

        # Plan -> Fan Out (Parallel); suites not selected return immediately
        for name in SUITES:
            workflow.add_edge("plan", name)
            # Fan In -> Report
            workflow.add_edge(name, "build_report")

        workflow.add_edge("build_report", END)
        return workflow

    def verify(self, suites: Iterable[str] = (), options: Optional[VerificationOptions] = None) -> VerificationReport:
        initial_state = VerificationState(options=options or VerificationOptions(), selected=list(suites))
        final_state = self.app.invoke(initial_state)
        if final_state.get("report"):
            return final_state["report"]
        raise ValueError("Verification finished without a report.")
