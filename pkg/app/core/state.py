"""
State carried through the decision pipeline
Holds the input graph, every intermediate result and per-step timings
"""

import time
from typing import Any, Dict, List, Optional

from typing_extensions import TypedDict

from app.core.config import DEFAULT_NODE_BUDGET, DEFAULT_THREADS


class DecisionState(TypedDict):
    """State object that passes through the decision workflow"""
    graph_id: str                      # family label or input digest
    graph: Any                         # Graph under decision
    constructed: Optional[Any]         # ConstructedGraph when built from a family
    labels: List[str]                  # human-readable vertex labels
    threads: int                       # worker threads for the kappa2 search
    node_budget: int                   # search node limit
    params: Optional[Any]              # SrgParams when strongly regular
    not_srg_reason: Optional[str]      # why srg_check failed, if it did
    spectrum: Optional[Any]            # Spectrum for SRG inputs
    rules: List[Any]                   # RuleResult list
    kappa: Optional[int]               # vertex connectivity
    kappa2: Optional[Any]              # Kappa2Result
    verdict: Optional[Any]             # Verdict
    report: Optional[Any]              # Report model
    timings: Dict[str, float]          # milliseconds per step
    error: Optional[str]               # fatal input problem
    exit_code: int                     # 0 ok, 2 invalid input, 3 undecided


def create_initial_state(graph, graph_id: str, labels: Optional[List[str]] = None, constructed=None,
                         threads: int = DEFAULT_THREADS, node_budget: int = DEFAULT_NODE_BUDGET) -> DecisionState:
    """Create a new state object for one graph"""
    return DecisionState(
        graph_id=graph_id,
        graph=graph,
        constructed=constructed,
        labels=list(labels) if labels is not None else [str(u) for u in range(graph.n)],
        threads=threads,
        node_budget=node_budget,
        params=None,
        not_srg_reason=None,
        spectrum=None,
        rules=[],
        kappa=None,
        kappa2=None,
        verdict=None,
        report=None,
        timings={},
        error=None,
        exit_code=0,
    )


def record_timing(state: DecisionState, step: str, started: float) -> DecisionState:
    """Store the elapsed milliseconds since `started` (a perf_counter value) under `step`"""
    state["timings"][step] = round((time.perf_counter() - started) * 1000.0, 3)
    return state
