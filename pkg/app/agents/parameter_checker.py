"""
Parameter Checking Agent
Verifies strong regularity, then computes the exact spectrum and the parameter-level rules
"""

import logging
import time

from app.analysis.srg import spectrum, srg_check, sufficiency_rules
from app.core.errors import GraphShapeError, InfeasibleMultiplicitiesError, SrgError
from app.core.state import DecisionState, record_timing

logger = logging.getLogger(__name__)


class ParameterChecker:
    """Classifies the input graph and evaluates everything that depends only on (v,k,lambda,mu)"""

    def check_parameters(self, state: DecisionState) -> DecisionState:
        started = time.perf_counter()
        G = state["graph"]
        try:
            params = srg_check(G)
        except GraphShapeError as e:
            # complete or disconnected inputs have no kappa2 to decide
            logger.error(f"❌ {state['graph_id']}: {e}")
            state["error"] = str(e)
            state["exit_code"] = e.exit_code
            return record_timing(state, "check_parameters", started)
        except SrgError as e:
            logger.info(f"{state['graph_id']} is not strongly regular: {e}")
            state["not_srg_reason"] = str(e)
            return record_timing(state, "check_parameters", started)

        cg = state["constructed"]
        if cg is not None and cg.expected_params != params:
            logger.warning(f"⚠️ {cg.name}: found {params}, expected {cg.expected_params}")
        state["params"] = params
        logger.info(f"✅ {state['graph_id']} is an SRG{params}")
        return record_timing(state, "check_parameters", started)

    def analyse_spectrum(self, state: DecisionState) -> DecisionState:
        started = time.perf_counter()
        params = state["params"]
        try:
            state["spectrum"] = spectrum(params)
        except InfeasibleMultiplicitiesError as e:
            # an actual SRG always has integral multiplicities
            logger.error(f"❌ {e}")
            state["error"] = str(e)
            state["exit_code"] = e.exit_code
            return record_timing(state, "analyse_spectrum", started)
        state["rules"] = sufficiency_rules(params)
        held = [r.rule for r in state["rules"] if r.holds]
        logger.info(f"spectrum {state['spectrum'].table_entry()}, rules holding: {held or 'none'}")
        return record_timing(state, "analyse_spectrum", started)


def check_parameters(state: DecisionState) -> DecisionState:
    """Main function called by the workflow"""
    checker = ParameterChecker()
    return checker.check_parameters(state)


def analyse_spectrum(state: DecisionState) -> DecisionState:
    checker = ParameterChecker()
    return checker.analyse_spectrum(state)
