"""
Connectivity Agent
Computes kappa by max flow and kappa2 by the exact branch-and-bound search
"""

import logging
import time

from app.analysis.connectivity import kappa2_exact, vertex_connectivity
from app.core.errors import SrgToolError
from app.core.state import DecisionState, record_timing

logger = logging.getLogger(__name__)


class ConnectivitySolver:
    """Runs both connectivity computations; lines of constructed graphs seed the search"""

    def compute_connectivity(self, state: DecisionState) -> DecisionState:
        started = time.perf_counter()
        try:
            state["kappa"] = vertex_connectivity(state["graph"])
        except SrgToolError as e:
            logger.error(f"❌ {e}")
            state["error"] = str(e)
            state["exit_code"] = e.exit_code
            return record_timing(state, "compute_connectivity", started)
        params = state["params"]
        if params is not None and state["kappa"] != params.k:
            logger.warning(f"⚠️ kappa = {state['kappa']} differs from k = {params.k}")
        return record_timing(state, "compute_connectivity", started)

    def search_kappa2(self, state: DecisionState) -> DecisionState:
        started = time.perf_counter()
        cg = state["constructed"]
        seeds = cg.lines if cg is not None and cg.lines else ()
        result = kappa2_exact(
            state["graph"],
            threads=state["threads"],
            node_budget=state["node_budget"],
            params=state["params"],
            seeds=seeds,
            kappa=state["kappa"],
        )
        state["kappa2"] = result
        if not result.closed:
            state["exit_code"] = 3
        return record_timing(state, "search_kappa2", started)


def compute_connectivity(state: DecisionState) -> DecisionState:
    """Main function called by the workflow"""
    solver = ConnectivitySolver()
    return solver.compute_connectivity(state)


def search_kappa2(state: DecisionState) -> DecisionState:
    solver = ConnectivitySolver()
    return solver.search_kappa2(state)
