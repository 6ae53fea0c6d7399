"""
SRG toolkit - decides kappa2 against the edge-neighbourhood bound for strongly regular graphs
"""

__version__ = "0.1.0"

from app.core.pipeline import get_decision_pipeline
from app.core.state import DecisionState, create_initial_state

__all__ = ["get_decision_pipeline", "create_initial_state", "DecisionState"]
