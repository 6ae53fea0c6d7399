"""
Census table of the small strongly regular graphs
Builds every catalog graph up to a vertex bound, decides it and checks the recorded verdict and rule
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from app.analysis.connectivity import clique_cut_certificate
from app.analysis.srg import (
    CLIQUE_NEIGHBOURHOOD_CUT,
    EXHAUSTIVE_SEARCH,
    LATTICE_EDGE_CUTS,
    NO_VALID_CUT,
    PARAMETER_RULES,
    make_params,
    spectrum,
    sufficiency_rules,
)
from app.catalog.census_metadata import CENSUS_ENTRIES, COUNTEREXAMPLE, OK, PARAMETER_ROWS
from app.catalog.registry import build_family
from app.core.config import CENSUS_MAX_V, DEFAULT_NODE_BUDGET, DEFAULT_THREADS, OUTPUT_DIR
from app.core.errors import IoError, ParamOutOfRangeError
from app.core.pipeline import get_decision_pipeline
from app.core.state import create_initial_state
from app.models import FamilySpec, VerdictStatus

logger = logging.getLogger(__name__)

COLUMNS = ["row", "graph", "v", "k", "lambda", "mu", "spectrum", "kappa2", "status", "verdict", "rule",
           "rule_verified", "decide_rule", "recorded", "agrees", "computed"]

PARAMETER_ONLY = "parameter-level only"


def status_symbol(status: VerdictStatus) -> str:
    if status == VerdictStatus.COUNTEREXAMPLE:
        return COUNTEREXAMPLE
    if status in (VerdictStatus.OK_NO_VALID_CUT, VerdictStatus.OK_EQUALITY):
        return OK
    return "?"


def rule_verified(rule: str, final: Dict[str, Any]) -> bool:
    """Does the recorded rule actually settle this graph?"""
    params = final["params"]
    result = final["kappa2"]
    status = final["verdict"].status
    if rule in PARAMETER_RULES:
        return any(r.rule == rule and r.holds for r in final["rules"])
    if rule == NO_VALID_CUT:
        return result.closed and result.value is None
    if rule == CLIQUE_NEIGHBOURHOOD_CUT:
        cg = final["constructed"]
        if status != VerdictStatus.COUNTEREXAMPLE or cg is None or not cg.lines:
            return False
        cert = clique_cut_certificate(cg, 0)
        return bool(cert) and cert.s == result.value
    if rule == LATTICE_EDGE_CUTS:
        return result.closed and result.value == params.edge_bound
    if rule == EXHAUSTIVE_SEARCH:
        return result.closed and status_symbol(status) == OK
    return False


class CensusBuilder:
    """Decides each catalog graph with at most max_v vertices"""

    def __init__(self, max_v: int, threads: int = DEFAULT_THREADS, node_budget: int = DEFAULT_NODE_BUDGET):
        if max_v > CENSUS_MAX_V:
            raise ParamOutOfRangeError(f"census covers at most {CENSUS_MAX_V} vertices, got {max_v}")
        self.max_v = max_v
        self.threads = threads
        self.node_budget = node_budget
        self.pipeline = get_decision_pipeline()

    def graph_row(self, name: str, entry: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        cg = build_family(FamilySpec.model_validate(entry["spec"]))
        if cg.n > self.max_v:
            return None
        state = create_initial_state(cg.graph, name, cg.labels, constructed=cg,
                                     threads=self.threads, node_budget=self.node_budget)
        final = self.pipeline.process(state)
        if final["error"]:
            logger.error(f"❌ {name}: {final['error']}")
            return None
        p = final["params"]
        verdict = final["verdict"]
        symbol = status_symbol(verdict.status)
        verified = rule_verified(entry["rule"], final)
        return {
            "row": entry["row"],
            "graph": name,
            "v": p.v, "k": p.k, "lambda": p.lam, "mu": p.mu,
            "spectrum": final["spectrum"].table_entry(),
            "kappa2": "inf" if final["kappa2"].value is None else final["kappa2"].value,
            "status": symbol,
            "verdict": verdict.status.value,
            "rule": entry["rule"],
            "rule_verified": verified,
            "decide_rule": verdict.rule,
            "recorded": entry["status"],
            "agrees": symbol == entry["status"] and verified,
            "computed": True,
        }

    def parameter_row(self, row: str, entry: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        p = make_params(*entry["params"])
        if p.v > self.max_v:
            return None
        rules = sufficiency_rules(p)
        rule = entry["rule"]
        verified = any(r.rule == rule and r.holds for r in rules) if rule in PARAMETER_RULES else False
        return {
            "row": row,
            "graph": PARAMETER_ONLY,
            "v": p.v, "k": p.k, "lambda": p.lam, "mu": p.mu,
            "spectrum": spectrum(p).table_entry(),
            "kappa2": None,
            "status": entry["status"],
            "verdict": PARAMETER_ONLY,
            "rule": rule,
            "rule_verified": verified,
            "decide_rule": next((r.rule for r in rules if r.holds), None),
            "recorded": entry["status"],
            "agrees": None,
            "computed": False,
        }

    def build(self) -> pd.DataFrame:
        rows: List[Tuple[int, int, Dict[str, Any]]] = []
        for order, (name, entry) in enumerate(CENSUS_ENTRIES.items()):
            row = self.graph_row(name, entry)
            if row is not None:
                rows.append((row["v"], order, row))
        for order, (label, entry) in enumerate(PARAMETER_ROWS.items()):
            row = self.parameter_row(label, entry)
            if row is not None:
                rows.append((row["v"], len(CENSUS_ENTRIES) + order, row))
        rows.sort(key=lambda item: (item[0], item[1]))
        df = pd.DataFrame([row for _, _, row in rows], columns=COLUMNS)
        disagreements = df[df["computed"] & ~df["agrees"].astype(bool)]
        if len(disagreements):
            logger.warning(f"⚠️ {len(disagreements)} census rows disagree with the recorded table")
        logger.info(f"✅ census of {len(df)} rows up to v = {self.max_v}")
        return df


def resolve_output(out: str) -> Path:
    path = Path(out)
    return path if path.is_absolute() else Path(OUTPUT_DIR) / path


def write_census(df: pd.DataFrame, out: str) -> Tuple[Path, Path]:
    """Write <out>.txt (aligned table) and <out>.json (records)"""
    base = resolve_output(out)
    txt, js = base.with_name(base.name + ".txt"), base.with_name(base.name + ".json")
    try:
        base.parent.mkdir(parents=True, exist_ok=True)
        txt.write_text(df.to_string(index=False) + "\n", encoding="utf-8")
        js.write_text(df.to_json(orient="records", force_ascii=False, indent=2), encoding="utf-8")
    except OSError as e:
        raise IoError(f"cannot write census to {base}: {e}") from e
    return txt, js


def cmd_census(max_v: int, out: str, threads: int = DEFAULT_THREADS,
               node_budget: int = DEFAULT_NODE_BUDGET) -> pd.DataFrame:
    df = CensusBuilder(max_v, threads=threads, node_budget=node_budget).build()
    write_census(df, out)
    return df
