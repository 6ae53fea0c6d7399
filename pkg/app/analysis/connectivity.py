"""
Vertex connectivity, cut certificates and the exact kappa2 search

kappa2 is the minimum size of a set S whose removal leaves at least two
components, none of them a single vertex. Every such S with a smallest
component A contains N(A) together with the vertices left isolated by
G - (A + N(A)); that union is itself a valid cut whenever the remainder keeps
a component with an edge. The search therefore ranges over connected sets A
rooted at their least vertex and scores them by

    cost(A) = |N(A)| + #singletons(G - (A + N(A)))
"""

from __future__ import annotations

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Set, Tuple, Union

from networkx.algorithms.connectivity import build_auxiliary_node_connectivity, local_node_connectivity
from networkx.algorithms.flow import build_residual_network

from app.analysis.srg import spectral_size_cap
from app.core.config import DEFAULT_NODE_BUDGET, DEFAULT_THREADS
from app.core.errors import BudgetExceededError, CompleteGraphError, DisconnectedError, NoLinesError
from app.graphs.graph import Graph, VertexSet, iter_bits
from app.models import SrgParams

logger = logging.getLogger(__name__)

EMPTY_REMAINDER = "EmptyRemainder"
CONNECTED = "Connected"
HAS_SINGLETON = "HasSingleton"


@dataclass(frozen=True)
class CutCertificate:
    """A partition (A, S, B) of V with no A-B edges and no singleton components"""

    A: VertexSet
    S: VertexSet
    B: VertexSet

    @property
    def a(self) -> int:
        return len(self.A)

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def b(self) -> int:
        return len(self.B)

    def key(self) -> Tuple[List[int], List[int]]:
        """Tie-break: least sorted A, then least sorted S"""
        return (self.A.to_list(), self.S.to_list())

    def labelled(self, labels: List[str]) -> Dict[str, List[str]]:
        return {name: [labels[u] for u in part] for name, part in (("A", self.A), ("S", self.S), ("B", self.B))}


@dataclass(frozen=True)
class InvalidCut:
    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass
class Kappa2Result:
    """value None means no valid cut exists (when closed) or none was found (when not)"""

    value: Optional[int]
    closed: bool
    certificate: Optional[CutCertificate] = None
    optimal: List[CutCertificate] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)


def _require_connected_noncomplete(G: Graph) -> None:
    if G.n < 2 or G.is_complete():
        raise CompleteGraphError(f"graph on {G.n} vertices is complete")
    if not G.is_connected():
        raise DisconnectedError("graph is disconnected")


def vertex_connectivity(G: Graph) -> int:
    """Exact kappa(G) by unit-capacity max flow on the vertex-split digraph

    A minimum separator misses some vertex of least degree v0 or one of its
    neighbours, so v0 against every non-neighbour plus every non-adjacent
    pair inside N(v0) covers all minimum cuts.
    """
    _require_connected_noncomplete(G)
    g = G.to_networkx()
    H = build_auxiliary_node_connectivity(g)
    R = build_residual_network(H, "capacity")

    degrees = G.degrees()
    v0 = min(range(G.n), key=lambda u: (degrees[u], u))
    best = degrees[v0]
    for w in iter_bits(G.all_bits & ~G.adj[v0] & ~(1 << v0)):
        best = min(best, local_node_connectivity(g, v0, w, auxiliary=H, residual=R, cutoff=best))
    neighbours = list(iter_bits(G.adj[v0]))
    for i, x in enumerate(neighbours):
        for y in neighbours[i + 1:]:
            if not G.has_edge(x, y):
                best = min(best, local_node_connectivity(g, x, y, auxiliary=H, residual=R, cutoff=best))
    return best


def verify_cut(G: Graph, S: VertexSet) -> Union[CutCertificate, InvalidCut]:
    """Check that G - S splits into at least two components of size >= 2

    The certificate's A is the smallest component, ties broken by sorted vertex list.
    """
    remainder = G.all_bits & ~S.bits
    if not remainder:
        return InvalidCut(EMPTY_REMAINDER)
    comps = G.component_bits(remainder)
    if len(comps) < 2:
        return InvalidCut(CONNECTED)
    if any(c & (c - 1) == 0 for c in comps):
        return InvalidCut(HAS_SINGLETON)
    smallest = min(comps, key=lambda c: (c.bit_count(), list(iter_bits(c))))
    return CutCertificate(VertexSet(G.n, smallest), S, VertexSet(G.n, remainder & ~smallest))


def clique_cut_certificate(cg, index: int) -> Union[CutCertificate, InvalidCut]:
    """S = N(C) for the index-th line C of a constructed graph, reported with A = C"""
    if not cg.lines:
        raise NoLinesError(f"{cg.name} has no lines")
    C = cg.lines[index]
    G = cg.graph
    S = VertexSet(G.n, G.neighborhood_bits(C.bits))
    checked = verify_cut(G, S)
    if not checked:
        return checked
    return CutCertificate(C, S, VertexSet(G.n, G.all_bits & ~S.bits & ~C.bits))


def cut_cost(G: Graph, A: int, NA: Optional[int] = None) -> Tuple[Optional[int], int]:
    """(cost, S) for a connected set A; cost is None when the remainder is all singletons"""
    adj = G.adj
    if NA is None:
        NA = G.neighborhood_bits(A)
    rest = G.all_bits & ~(A | NA)
    singles = 0
    for u in iter_bits(rest):
        if not adj[u] & rest:
            singles |= 1 << u
    if not rest & ~singles:
        return None, NA | singles
    S = NA | singles
    return S.bit_count(), S


class Kappa2Solver:
    """Branch-and-bound over connected sets, shared incumbent across worker threads"""

    def __init__(self, G: Graph, params: Optional[SrgParams] = None, threads: int = DEFAULT_THREADS,
                 node_budget: int = DEFAULT_NODE_BUDGET, seeds: Iterable[VertexSet] = (),
                 kappa: Optional[int] = None):
        _require_connected_noncomplete(G)
        self.G = G
        self.params = params
        self.threads = max(1, threads)
        self.node_budget = node_budget
        self.seeds = list(seeds)
        if kappa is None:
            kappa = params.k if params is not None else vertex_connectivity(G)
        self.kappa = kappa
        self.a_max = (G.n - kappa) // 2

        self._lock = threading.Lock()
        self._incumbent = G.n
        self._best: Set[int] = set()
        self._nodes = 0
        self._exhausted = False
        self._cap_cache: Dict[int, int] = {}
        self._min_edge_neighbourhood = G.n
        self.prunes = {"frontier": 0, "size_cap": 0, "edge_bound": 0}

    # Bounds

    def size_cap(self, threshold: int) -> int:
        """Largest |A| that can belong to a cut of size <= threshold"""
        cap = self._cap_cache.get(threshold)
        if cap is None:
            cap = self.a_max
            if self.params is not None:
                cap = spectral_size_cap(self.params, threshold, self.a_max)
            self._cap_cache[threshold] = cap
        return cap

    def size_floor(self, cap: int) -> int:
        """Lower bound on |N(A)| for every connected A with 2 <= |A| <= cap"""
        if self.params is not None:
            return 2 * self.params.k - self.params.lam - cap
        return self._min_edge_neighbourhood - (cap - 2)

    # Incumbent bookkeeping

    def _offer(self, cost: int, S: int) -> None:
        with self._lock:
            if cost < self._incumbent:
                self._incumbent = cost
                self._best = {S}
                logger.debug(f"incumbent improved to {cost}")
            elif cost == self._incumbent:
                self._best.add(S)

    def _prune(self, kind: str) -> None:
        with self._lock:
            self.prunes[kind] += 1

    def _tick(self) -> bool:
        """Count a node; False once the budget is spent"""
        with self._lock:
            self._nodes += 1
            if self._nodes > self.node_budget:
                self._exhausted = True
                return False
            return True

    def _seed(self) -> int:
        G = self.G
        count = 0
        candidates = [(1 << u) | (1 << w) for u, w in G.edges()] + [s.bits for s in self.seeds]
        for A in candidates:
            NA = G.neighborhood_bits(A)
            if A.bit_count() == 2:
                self._min_edge_neighbourhood = min(self._min_edge_neighbourhood, NA.bit_count())
            cost, S = cut_cost(G, A, NA)
            if cost is not None:
                self._offer(cost, S)
                count += 1
        return count

    # Search

    def _extend(self, root_higher: int, A: int, NA: int, ext: int, size: int) -> None:
        if self._exhausted:
            return
        G = self.G
        adj = G.adj
        while ext:
            if not self._tick():
                return
            T = self._incumbent
            cap = self.size_cap(T)
            if size + 1 > cap:
                self._prune("size_cap")
                return
            w = ext & -ext
            ext ^= w
            u = w.bit_length() - 1
            A2 = A | w
            NA2 = (NA | adj[u]) & ~A2
            size2 = size + 1
            if NA2.bit_count() - (cap - size2) > T:
                self._prune("frontier")
                continue
            cost, S = cut_cost(G, A2, NA2)
            if cost is not None and cost <= T:
                self._offer(cost, S)
            if size2 < cap:
                ext2 = ext | (adj[u] & root_higher & ~(A | NA))
                self._extend(root_higher, A2, NA2, ext2, size2)

    def _search_root(self, r: int) -> None:
        G = self.G
        higher = G.all_bits & ~((1 << (r + 1)) - 1)
        A = 1 << r
        NA = G.adj[r]
        T = self._incumbent
        if NA.bit_count() - (self.size_cap(T) - 1) > T:
            self._prune("frontier")
            return
        self._extend(higher, A, NA, NA & higher, 1)

    def solve(self, enumerate_all: bool = False) -> Kappa2Result:
        G = self.G
        logger.info(f"🔍 kappa2 search on {G.n} vertices (kappa={self.kappa}, a_max={self.a_max}, threads={self.threads})")
        seeded = self._seed()
        logger.debug(f"seed bound {self._incumbent} from {seeded} valid seeds, size cap {self.size_cap(self._incumbent)}")

        if self.a_max >= 2:
            cap = self.size_cap(self._incumbent)
            if cap < 2 or self.size_floor(cap) > self._incumbent:
                self._prune("edge_bound")
            else:
                roots = list(range(G.n))
                if self.threads == 1:
                    for r in roots:
                        self._search_root(r)
                else:
                    with ThreadPoolExecutor(max_workers=self.threads) as pool:
                        list(pool.map(self._search_root, roots))

        closed = not self._exhausted
        stats = {
            "nodes": self._nodes,
            "prunes": dict(self.prunes),
            "seeds": seeded,
            "a_max": self.a_max,
            "size_cap": self.size_cap(self._incumbent) if self._best else self.a_max,
            "threads": self.threads,
        }
        if not self._best:
            if closed:
                logger.info("✅ search closed: no valid cut")
            else:
                logger.warning(f"⚠️ node budget {self.node_budget} exhausted before any cut was found")
            return Kappa2Result(None, closed, stats=stats)

        certs = []
        for S in self._best:
            cert = verify_cut(G, VertexSet(G.n, S))
            if not cert:
                raise AssertionError(f"search produced an invalid cut ({cert.reason})")
            certs.append(cert)
        certs.sort(key=CutCertificate.key)
        value = certs[0].s
        stats["optimal_count"] = len(certs)
        if closed:
            logger.info(f"✅ search closed: kappa2 = {value} ({len(certs)} optimal cuts)")
        else:
            logger.warning(f"⚠️ node budget {self.node_budget} exhausted; best so far {value}")
        return Kappa2Result(value, closed, certs[0], certs if enumerate_all else [], stats)


def kappa2_exact(G: Graph, enumerate_all: bool = False, threads: int = DEFAULT_THREADS,
                 node_budget: int = DEFAULT_NODE_BUDGET, params: Optional[SrgParams] = None,
                 seeds: Iterable[VertexSet] = (), kappa: Optional[int] = None) -> Kappa2Result:
    """Exact kappa2; pass params only for graphs already verified strongly regular"""
    solver = Kappa2Solver(G, params=params, threads=threads, node_budget=node_budget, seeds=seeds, kappa=kappa)
    return solver.solve(enumerate_all=enumerate_all)


def enumerate_optimal_cuts(G: Graph, **options) -> List[CutCertificate]:
    """Every minimum valid cut, one certificate per distinct S"""
    result = kappa2_exact(G, enumerate_all=True, **options)
    if not result.closed:
        raise BudgetExceededError("search did not close within the node budget", result=result)
    return result.optimal
