"""
Verdict Agent
Turns kappa2 into a verdict and assembles the JSON report with a labelled certificate
"""

import logging
import time
from typing import Optional

from app.analysis.connectivity import verify_cut
from app.analysis.srg import decide_verdict
from app.core.config import TOOL_VERSION
from app.core.errors import LabelError
from app.core.state import DecisionState, record_timing
from app.graphs.graph import VertexSet
from app.graphs.graph6 import graph6_decode, graph6_encode
from app.models import (
    CertificateModel,
    Kappa2Model,
    ParamsModel,
    Report,
    RuleModel,
    VerdictStatus,
)

logger = logging.getLogger(__name__)


class VerdictGenerator:
    """Applies the decision table and builds the report"""

    def generate_verdict(self, state: DecisionState) -> DecisionState:
        started = time.perf_counter()
        verdict = decide_verdict(state["params"], state["kappa2"], state["rules"])
        state["verdict"] = verdict
        marker = "❌" if verdict.status == VerdictStatus.COUNTEREXAMPLE else "✅"
        if verdict.status == VerdictStatus.UNDECIDED:
            marker = "⚠️"
        logger.info(f"{marker} {state['graph_id']}: {verdict.status.value} (rule: {verdict.rule})")
        record_timing(state, "generate_verdict", started)
        state["report"] = build_report(state)
        return state


def build_report(state: DecisionState) -> Report:
    """Report for a finished or failed pipeline run"""
    G = state["graph"]
    labels = state["labels"]
    report = Report(
        id=state["graph_id"],
        graph6=graph6_encode(G).decode("ascii").rstrip("\n") if G is not None else None,
        labels=labels,
        timing_ms=dict(state["timings"]),
        version=TOOL_VERSION,
        error=state["error"],
    )
    params = state["params"]
    if params is not None:
        report.params = ParamsModel(v=params.v, k=params.k, lam=params.lam, mu=params.mu)
    if state["spectrum"] is not None:
        report.spectrum = state["spectrum"].to_model()
    report.rules = [RuleModel(rule=r.rule, holds=r.holds, evidence=r.evidence) for r in state["rules"]]
    report.kappa = state["kappa"]
    result = state["kappa2"]
    if result is not None:
        report.kappa2 = Kappa2Model(value=result.value, closed=result.closed)
        report.stats = dict(result.stats)
        if result.certificate is not None:
            report.certificate = CertificateModel(**result.certificate.labelled(labels))
    verdict = state["verdict"]
    if verdict is not None:
        report.verdict = verdict.status
        report.rule = verdict.rule
    if state["not_srg_reason"]:
        report.stats["not_srg"] = state["not_srg_reason"]
    return report


def verify_report(report: Report) -> Optional[str]:
    """Re-check the embedded certificate from the report alone; None when it holds"""
    if report.certificate is None:
        return None
    if report.graph6 is None or report.labels is None:
        return "report carries a certificate but no graph6 or labels"
    G = graph6_decode(report.graph6)
    index = {label: i for i, label in enumerate(report.labels)}
    try:
        A, S, B = (
            VertexSet.from_iterable(G.n, (index[x] for x in part))
            for part in (report.certificate.A, report.certificate.S, report.certificate.B)
        )
    except KeyError as e:
        raise LabelError(f"certificate names unknown vertex {e.args[0]!r}") from None
    checked = verify_cut(G, S)
    if not checked:
        return f"S is not a valid cut ({checked.reason})"
    if A.bits & B.bits or (A | B | S).bits != G.all_bits or A.bits & S.bits or B.bits & S.bits:
        return "A, S, B do not partition the vertices"
    if G.neighborhood_bits(A.bits) & B.bits:
        return "an edge joins A and B"
    if report.kappa2 is not None and report.kappa2.value != len(S):
        return f"|S| = {len(S)} but kappa2 = {report.kappa2.value}"
    return None


def generate_verdict(state: DecisionState) -> DecisionState:
    """Main function called by the workflow"""
    generator = VerdictGenerator()
    return generator.generate_verdict(state)
