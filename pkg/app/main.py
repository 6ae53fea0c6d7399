"""
SRG toolkit command line
Subcommands: construct, decide, census, batch, verify-cut, delta-check, oracle
"""

import argparse
import hashlib
import json
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from app.analysis.connectivity import clique_cut_certificate, verify_cut
from app.analysis.geometry import delta_counterexample_test
from app.analysis.oracle import kappa2_bruteforce
from app.catalog.census import cmd_census, resolve_output
from app.catalog.registry import build_family
from app.core.config import (
    CENSUS_DEFAULT_MAX_V,
    DEFAULT_NODE_BUDGET,
    DEFAULT_THREADS,
    LOG_LEVEL,
    TOOL_VERSION,
)
from app.core.errors import IoError, LabelError, SrgToolError
from app.core.pipeline import get_decision_pipeline
from app.core.state import create_initial_state
from app.graphs.constructions import ConstructedGraph
from app.graphs.graph import Graph, VertexSet
from app.graphs.graph6 import graph6_decode, read_graph6_file, write_graph6_file
from app.models import FamilySpec, Report

logger = logging.getLogger(__name__)

FAMILY_CHOICES = [
    "triangular", "lattice", "latin", "paley", "symplectic", "quadric", "twenty-seven-lines",
    "schlafli", "clebsch", "shrikhande", "chang", "petersen",
]


def family_spec(args) -> FamilySpec:
    """FamilySpec from the --family group of flags"""
    f = args.family
    if f == "triangular":
        spec = FamilySpec(family="Triangular", m=args.m)
    elif f == "lattice":
        spec = FamilySpec(family="Lattice", n=args.n)
    elif f == "latin":
        spec = FamilySpec(family="LatinSquare", n=args.n)
    elif f == "paley":
        spec = FamilySpec(family="Paley", q=args.q)
    elif f == "symplectic":
        spec = FamilySpec(family="Symplectic", r=args.r, q=args.q)
    elif f == "quadric":
        tag = "HyperbolicQuadric" if args.sign == "+" else "EllipticQuadric"
        spec = FamilySpec(family=tag, r=args.r)
    elif f == "chang":
        spec = FamilySpec(family="Chang", index=args.index)
    else:
        spec = FamilySpec(family={
            "twenty-seven-lines": "TwentySevenLines", "schlafli": "Schlafli", "clebsch": "Clebsch",
            "shrikhande": "Shrikhande", "petersen": "Petersen",
        }[f])
    if args.complement:
        spec = FamilySpec(family="ComplementOf", inner=spec)
    return spec


LABEL_TOKEN = re.compile(r"\{[^}]*\}|\([^)]*\)|[^,\s]+")


def split_labels(text: str) -> List[str]:
    """Comma-separated labels; commas inside {...} and (...) belong to the label"""
    return LABEL_TOKEN.findall(text)


def graph_digest(line: bytes) -> str:
    return "g6:" + hashlib.sha256(line.strip()).hexdigest()[:16]


def sidecar_path(path: Path) -> Path:
    return path.with_name(path.name + ".labels.json")


def read_labels(path: Path, n: int) -> Optional[List[str]]:
    side = sidecar_path(path)
    if not side.exists():
        return None
    try:
        labels = json.loads(side.read_text(encoding="utf-8"))
    except (OSError, ValueError) as e:
        raise IoError(f"cannot read label map {side}: {e}") from e
    if len(labels) != n:
        logger.warning(f"⚠️ label map {side} has {len(labels)} labels for {n} vertices; ignored")
        return None
    return labels


def load_input(args) -> Tuple[Graph, str, List[str], Optional[ConstructedGraph]]:
    """(graph, id, labels, constructed) from --in or from the family flags"""
    if args.input:
        path = Path(args.input)
        lines = read_graph6_file(path)
        if not lines:
            raise IoError(f"{path} contains no graph")
        G = graph6_decode(lines[0])
        labels = read_labels(path, G.n) or [str(u) for u in range(G.n)]
        return G, graph_digest(lines[0]), labels, None
    if not args.family:
        raise IoError("give either --in or --family")
    cg = build_family(family_spec(args))
    return cg.graph, cg.name, list(cg.labels), cg


def decide_graph(G: Graph, graph_id: str, labels: List[str], constructed=None,
                 threads: int = DEFAULT_THREADS, node_budget: int = DEFAULT_NODE_BUDGET) -> Tuple[Report, int]:
    state = create_initial_state(G, graph_id, labels, constructed=constructed,
                                 threads=threads, node_budget=node_budget)
    final = get_decision_pipeline().process(state)
    return final["report"], final["exit_code"]


# Subcommands

def cmd_construct(args) -> int:
    cg = build_family(family_spec(args))
    out = resolve_output(args.out)
    write_graph6_file(out, [cg.graph])
    try:
        sidecar_path(out).write_text(json.dumps(list(cg.labels), ensure_ascii=False), encoding="utf-8")
    except OSError as e:
        raise IoError(f"cannot write label map for {out}: {e}") from e
    print(f"✅ {cg.name}: {cg.n} vertices, expected {cg.expected_params} -> {out}")
    return 0


def cmd_decide(args) -> int:
    G, graph_id, labels, cg = load_input(args)
    report, code = decide_graph(G, graph_id, labels, cg, args.threads, args.node_budget)
    print(report.to_json())
    return code


def cmd_batch(args) -> int:
    lines = read_graph6_file(Path(args.input))
    out = open(resolve_output(args.out), "w", encoding="utf-8") if args.out else sys.stdout
    code = 0
    try:
        for position, line in enumerate(lines):
            if position < args.skip:
                continue
            graph_id = graph_digest(line)
            try:
                G = graph6_decode(line)
            except SrgToolError as e:
                report = Report(id=graph_id, graph6=line.decode("ascii", "replace").strip(),
                                version=TOOL_VERSION, error=str(e))
                logger.warning(f"⚠️ line {position}: {e}")
            else:
                report, line_code = decide_graph(G, graph_id, [str(u) for u in range(G.n)],
                                                 threads=args.threads, node_budget=args.node_budget)
                if line_code == 3:
                    code = 3
            out.write(report.to_json() + "\n")
    except OSError as e:
        raise IoError(f"cannot write batch output: {e}") from e
    finally:
        if out is not sys.stdout:
            out.close()
    return code


def cmd_verify_cut(args) -> int:
    G, graph_id, labels, cg = load_input(args)
    index = {label: i for i, label in enumerate(labels)}
    names = split_labels(args.cut)
    if cg is not None:
        S = cg.vertex_set(names)
    else:
        missing = [x for x in names if x not in index]
        if missing:
            raise LabelError(f"unknown vertex labels {missing}")
        S = VertexSet.from_iterable(G.n, (index[x] for x in names))
    result = verify_cut(G, S)
    if result:
        print(json.dumps({"id": graph_id, "valid": True, "size": result.s, **result.labelled(labels)},
                         ensure_ascii=False))
    else:
        print(json.dumps({"id": graph_id, "valid": False, "reason": result.reason}))
    return 0


def cmd_delta_check(args) -> int:
    cg = build_family(family_spec(args))
    test = delta_counterexample_test(cg)
    payload = {
        "id": cg.name, "applies": test.applies, "predicted_cut_size": test.predicted_cut_size,
        "s": test.s, "mu(s+1)": test.mu * (test.s + 1), "ks": test.k * test.s,
    }
    certs = [clique_cut_certificate(cg, i) for i in range(len(cg.lines))]
    at_predicted = sum(1 for c in certs if c and c.s == test.predicted_cut_size)
    payload["lines_checked"] = len(certs)
    payload["lines_valid_at_predicted"] = at_predicted
    payload["all_lines_valid_at_predicted"] = at_predicted == len(certs)
    cert = certs[0]
    payload["certificate_valid"] = bool(cert)
    if cert:
        payload["certificate_size"] = cert.s
        payload["certificate"] = cert.labelled(list(cg.labels))
    print(json.dumps(payload, ensure_ascii=False))
    return 0


def cmd_oracle(args) -> int:
    G, graph_id, labels, _ = load_input(args)
    result = kappa2_bruteforce(G)
    print(json.dumps({
        "id": graph_id,
        "kappa2": result.value,
        "optimal": [c.labelled(labels) for c in result.optimal],
        "stats": result.stats,
    }, ensure_ascii=False))
    return 0


def cmd_census_command(args) -> int:
    df = cmd_census(args.max_v, args.out, threads=args.threads, node_budget=args.node_budget)
    print(df.to_string(index=False))
    return 0


# Argument parsing

def _add_family_flags(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--family", choices=FAMILY_CHOICES, required=required)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--index", type=int)
    p.add_argument("--complement", action="store_true")


def _add_tuning_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=DEFAULT_THREADS)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srg-toolkit", description="Decide kappa2 for strongly regular graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a family graph as graph6 plus a label map")
    _add_family_flags(p, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("decide", help="decide one graph and print its JSON report")
    p.add_argument("--in", dest="input")
    _add_family_flags(p)
    _add_tuning_flags(p)
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("census", help="reproduce the census table")
    p.add_argument("--max-v", type=int, default=CENSUS_DEFAULT_MAX_V)
    p.add_argument("--out", default="census")
    _add_tuning_flags(p)
    p.set_defaults(handler=cmd_census_command)

    p = sub.add_parser("batch", help="decide every graph of a graph6 file as JSON lines")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--skip", type=int, default=0)
    p.add_argument("--out")
    _add_tuning_flags(p)
    p.set_defaults(handler=cmd_batch)

    p = sub.add_parser("verify-cut", help="check a cut given as comma-separated labels")
    p.add_argument("--in", dest="input")
    _add_family_flags(p)
    p.add_argument("--cut", required=True)
    p.set_defaults(handler=cmd_verify_cut)

    p = sub.add_parser("delta-check", help="clique-neighbourhood counterexample test")
    _add_family_flags(p, required=True)
    p.set_defaults(handler=cmd_delta_check)

    p = sub.add_parser("oracle", help="brute-force kappa2 for small graphs")
    p.add_argument("--in", dest="input")
    _add_family_flags(p)
    p.set_defaults(handler=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=LOG_LEVEL)
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SrgToolError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
    except ValueError as e:
        # pydantic rejects incomplete family flags
        logger.error(f"❌ invalid input: {e}")
        return 2
