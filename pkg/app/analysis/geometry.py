"""
Partial linear spaces, perps and the clique-neighbourhood counterexample test
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from app.algebra.finite_field import field_of_order
from app.algebra.projective import SymplecticForm, normalize, projective_points, vector_add, vector_scale
from app.analysis.srg import srg_check
from app.core.errors import AdjacentPairError, GeometryError, NoLinesError
from app.graphs.graph import Graph, VertexSet, complement, iter_bits

logger = logging.getLogger(__name__)

Line = Tuple[int, ...]


@dataclass(frozen=True)
class PartialLinearSpace:
    """Points 0..n_points-1 and lines as sorted point tuples; order (s, t) when uniform"""

    n_points: int
    lines: Tuple[Line, ...]
    order: Optional[Tuple[int, int]] = None

    @classmethod
    def from_lines(cls, n_points: int, lines: Iterable[Iterable[int]]) -> "PartialLinearSpace":
        normalized = tuple(sorted({tuple(sorted(set(line))) for line in lines}))
        return cls(n_points, normalized, detect_order(n_points, normalized))

    def lines_through(self, x: int) -> List[Line]:
        return [line for line in self.lines if x in line]


@dataclass(frozen=True)
class AxiomReport:
    partial_linear: bool
    copolar: bool
    delta: bool
    gq: bool
    order: Optional[Tuple[int, int]]


@dataclass(frozen=True)
class PerpSets:
    perp: VertexSet
    perp_perp: VertexSet


@dataclass(frozen=True)
class RegularPair:
    regular: bool
    induced_complete_bipartite: bool


@dataclass(frozen=True)
class DeltaTest:
    applies: bool
    predicted_cut_size: int
    s: int
    k: int
    lam: int
    mu: int


def detect_order(n_points: int, lines: Sequence[Line]) -> Optional[Tuple[int, int]]:
    """(s, t) if every line has s+1 points and every point is on t+1 lines, else None"""
    if not lines:
        return None
    sizes = {len(line) for line in lines}
    if len(sizes) != 1:
        return None
    counts = [0] * n_points
    for line in lines:
        for x in line:
            counts[x] += 1
    if len(set(counts)) != 1 or counts[0] == 0:
        return None
    return (sizes.pop() - 1, counts[0] - 1)


def point_graph(S: PartialLinearSpace) -> Graph:
    """Collinearity graph"""
    rows = [0] * S.n_points
    for line in S.lines:
        bits = 0
        for x in line:
            bits |= 1 << x
        for x in line:
            rows[x] |= bits & ~(1 << x)
    return Graph(S.n_points, rows)


def check_axioms(S: PartialLinearSpace) -> AxiomReport:
    """Exhaustive check over every non-incident (point, line) pair"""
    partial_linear = all(len(line) >= 2 for line in S.lines)
    if partial_linear:
        seen = set()
        for line in S.lines:
            for pair in itertools.combinations(line, 2):
                if pair in seen:
                    partial_linear = False
                    break
                seen.add(pair)
            if not partial_linear:
                break

    G = point_graph(S)
    copolar = delta = gq = True
    for line in S.lines:
        line_bits = 0
        for x in line:
            line_bits |= 1 << x
        size = len(line)
        for p in iter_bits(G.all_bits & ~line_bits):
            hits = (G.adj[p] & line_bits).bit_count()
            if hits not in (0, size - 1):
                copolar = False
            if hits not in (0, size - 1, size):
                delta = False
            if hits != 1:
                gq = False
    return AxiomReport(partial_linear, copolar, delta, gq and partial_linear, S.order)


def perp_of(G: Graph, X: VertexSet) -> VertexSet:
    """X^perp: intersection of closed neighbourhoods; the empty set gives every vertex"""
    bits = G.all_bits
    for x in X:
        bits &= G.adj[x] | 1 << x
    return VertexSet(G.n, bits)


def perp_sets(G: Graph, x: int, y: int) -> PerpSets:
    if x == y:
        raise ValueError("perp sets need two distinct vertices")
    perp = perp_of(G, VertexSet.from_iterable(G.n, (x, y)))
    return PerpSets(perp, perp_of(G, perp))


def regular_pair(G: Graph, x: int, y: int, t: int) -> RegularPair:
    """A non-collinear pair is regular when |{x,y}^perpperp| = t+1"""
    if G.has_edge(x, y):
        raise AdjacentPairError(f"vertices {x} and {y} are adjacent")
    sets = perp_sets(G, x, y)
    P, Q = sets.perp.bits, sets.perp_perp.bits
    regular = len(sets.perp_perp) == t + 1

    bipartite = not P & Q and len(sets.perp) == t + 1 and len(sets.perp_perp) == t + 1
    if bipartite:
        for u in iter_bits(P):
            if G.adj[u] & P or G.adj[u] & Q != Q:
                bipartite = False
                break
    if bipartite:
        bipartite = all(not G.adj[u] & Q for u in iter_bits(Q))
    return RegularPair(regular, bipartite)


def delta_counterexample_test(cg) -> DeltaTest:
    """Lines of size s+1 with mu(s+1)/s < k and s >= 2 give a cut N(line) of size 2k-lambda-s-1"""
    if not cg.lines:
        raise NoLinesError(f"{cg.name} has no lines")
    sizes = {len(line) for line in cg.lines}
    if len(sizes) != 1:
        raise GeometryError(f"{cg.name} has lines of sizes {sorted(sizes)}")
    s = sizes.pop() - 1
    p = srg_check(cg.graph)
    applies = s >= 2 and p.mu * (s + 1) < p.k * s
    predicted = 2 * p.k - p.lam - s - 1
    logger.debug(f"{cg.name}: s={s}, mu(s+1)={p.mu * (s + 1)}, ks={p.k * s}, applies={applies}")
    return DeltaTest(applies, predicted, s, p.k, p.lam, p.mu)


def space_from_constructed(cg) -> PartialLinearSpace:
    if not cg.lines:
        raise NoLinesError(f"{cg.name} has no lines")
    return PartialLinearSpace.from_lines(cg.n, (line.to_list() for line in cg.lines))


def isotropic_line_space(q: int) -> PartialLinearSpace:
    """W(q): points of PG(3,q), lines the totally isotropic 2-spaces of the symplectic form"""
    F = field_of_order(q)
    form = SymplecticForm(F, 2)
    points = projective_points(F, 4)
    index = {p.coords: i for i, p in enumerate(points)}
    lines = set()
    for i, x in enumerate(points):
        for y in points[i + 1:]:
            if form.pair_values(x.coords, y.coords) != 0:
                continue
            span = {i}
            for c in range(q):
                span.add(index[normalize(F, vector_add(F, y.coords, vector_scale(F, c, x.coords))).coords])
            lines.add(tuple(sorted(span)))
    return PartialLinearSpace.from_lines(len(points), lines)


def hyperbolic_line(G: Graph, x: int, y: int, complement_graph: Optional[Graph] = None) -> VertexSet:
    """{x,y}^perpperp taken in the complement, for an adjacent pair of G"""
    if not G.has_edge(x, y):
        raise GeometryError(f"vertices {x} and {y} are not adjacent")
    H = complement_graph if complement_graph is not None else complement(G)
    return perp_sets(H, x, y).perp_perp


def hyperbolic_lines(G: Graph) -> Tuple[VertexSet, ...]:
    """All hyperbolic lines over the edges of G, deduplicated by sorted vertex list"""
    H = complement(G)
    found = {}
    for u, w in G.edges():
        line = hyperbolic_line(G, u, w, H)
        found.setdefault(tuple(line.to_list()), line)
    return tuple(found[key] for key in sorted(found))
