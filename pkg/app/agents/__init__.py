"""
Agent modules for the decision workflow
"""

from app.agents.connectivity_solver import compute_connectivity, search_kappa2
from app.agents.parameter_checker import analyse_spectrum, check_parameters
from app.agents.verdict_generator import build_report, generate_verdict, verify_report

__all__ = [
    "check_parameters",
    "analyse_spectrum",
    "compute_connectivity",
    "search_kappa2",
    "generate_verdict",
    "build_report",
    "verify_report",
]
