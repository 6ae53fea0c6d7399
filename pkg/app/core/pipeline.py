"""
Decision workflow orchestrator
Manages the flow: Parameter Check → Spectrum → Connectivity → kappa2 Search → Verdict
"""

import logging

from langgraph.graph import END, START, StateGraph

from app.agents.connectivity_solver import compute_connectivity, search_kappa2
from app.agents.parameter_checker import analyse_spectrum, check_parameters
from app.agents.verdict_generator import build_report, generate_verdict
from app.core.state import DecisionState

logger = logging.getLogger(__name__)


class DecisionPipeline:
    """Runs one graph through the decision workflow"""

    def __init__(self):
        self.graph = self._build_workflow()

    def _build_workflow(self):
        builder = StateGraph(DecisionState)

        builder.add_node("check_parameters", check_parameters)
        builder.add_node("analyse_spectrum", analyse_spectrum)
        builder.add_node("compute_connectivity", compute_connectivity)
        builder.add_node("search_kappa2", search_kappa2)
        builder.add_node("generate_verdict", generate_verdict)

        builder.add_edge(START, "check_parameters")

        # Non-SRG inputs skip the spectrum; fatal input errors end the run
        builder.add_conditional_edges(
            "check_parameters",
            self._route_after_check,
            {"end": END, "srg": "analyse_spectrum", "generic": "compute_connectivity"},
        )
        builder.add_conditional_edges(
            "analyse_spectrum", self._continue_or_end, {"end": END, "continue": "compute_connectivity"}
        )
        builder.add_conditional_edges(
            "compute_connectivity", self._continue_or_end, {"end": END, "continue": "search_kappa2"}
        )
        builder.add_edge("search_kappa2", "generate_verdict")
        builder.add_edge("generate_verdict", END)

        return builder.compile()

    def _route_after_check(self, state: DecisionState) -> str:
        if state["error"]:
            return "end"
        return "srg" if state["params"] is not None else "generic"

    def _continue_or_end(self, state: DecisionState) -> str:
        return "end" if state["error"] else "continue"

    def process(self, state: DecisionState) -> DecisionState:
        """Run the workflow; a report is attached even when a step fails"""
        final_state = self.graph.invoke(state)
        if final_state.get("report") is None:
            final_state["report"] = build_report(final_state)
        return final_state


# Global pipeline instance (singleton pattern)
_pipeline = None


def get_decision_pipeline() -> DecisionPipeline:
    """Get or create the global decision pipeline"""
    global _pipeline
    if _pipeline is None:
        _pipeline = DecisionPipeline()
    return _pipeline
