"""
Core components: configuration, errors, pipeline state and the decision workflow
"""

from app.core.pipeline import get_decision_pipeline
from app.core.state import DecisionState, create_initial_state

__all__ = [
    "DecisionState",
    "create_initial_state",
    "get_decision_pipeline",
]
