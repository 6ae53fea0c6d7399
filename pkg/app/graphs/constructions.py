"""
Builders for the strongly regular graph families
Each builder returns a ConstructedGraph: graph, vertex labels, expected parameters and optional lines
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.algebra.finite_field import field_make, field_of_order
from app.algebra.projective import (
    SymplecticForm,
    normalize,
    projective_points,
    vector_add,
    vector_scale,
)
from app.analysis.srg import complement_params, srg_check
from app.core.config import MAX_VERTICES
from app.core.errors import (
    BadResidueClassError,
    LabelError,
    NotLatinSquareError,
    ParamOutOfRangeError,
    UnsupportedOrderError,
)
from app.graphs.graph import Graph, VertexSet, complement, iter_bits
from app.models import SrgParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructedGraph:
    """A graph together with labels, expected SRG parameters and distinguished cliques"""

    name: str
    graph: Graph
    labels: Tuple[str, ...]
    expected_params: SrgParams
    lines: Optional[Tuple[VertexSet, ...]] = None

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError(f"{self.name}: {len(self.labels)} labels for {self.graph.n} vertices")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"{self.name}: vertex labels are not unique")
        for line in self.lines or ():
            for u in line:
                if line.bits & ~self.graph.adj[u] & ~(1 << u):
                    raise ValueError(f"{self.name}: line {self.label_list(line)} is not a clique")

    @property
    def n(self) -> int:
        return self.graph.n

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LabelError(f"{self.name} has no vertex labelled {label!r}") from None

    def vertex_set(self, labels: Iterable[str]) -> VertexSet:
        return VertexSet.from_iterable(self.n, (self.index_of(x) for x in labels))

    def label_list(self, X: VertexSet) -> List[str]:
        return [self.labels[u] for u in X]


def _from_adjacency(n: int, adjacent) -> Graph:
    rows = [0] * n
    for u in range(n):
        for w in range(u + 1, n):
            if adjacent(u, w):
                rows[u] |= 1 << w
                rows[w] |= 1 << u
    return Graph(n, rows)


def _dedupe_lines(n: int, lines: Iterable[Iterable[int]]) -> Tuple[VertexSet, ...]:
    """Deduplicate by sorted vertex list; output sorted the same way"""
    unique = {tuple(sorted(line)) for line in lines}
    return tuple(VertexSet.from_iterable(n, line) for line in sorted(unique))


def _validated(cg: ConstructedGraph) -> ConstructedGraph:
    found = srg_check(cg.graph)
    if found != cg.expected_params:
        raise ParamOutOfRangeError(f"{cg.name} has parameters {found}, expected {cg.expected_params}")
    return cg


def triangular(m: int) -> ConstructedGraph:
    """T(m): 2-subsets of {1..m}, adjacent when they meet in one element"""
    if m < 4:
        raise ParamOutOfRangeError(f"triangular graph needs m >= 4, got {m}")
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    index = {p: i for i, p in enumerate(pairs)}
    graph = _from_adjacency(len(pairs), lambda u, w: len(set(pairs[u]) & set(pairs[w])) == 1)
    lines = [(index[(a, b)], index[(a, c)], index[(b, c)]) for a, b, c in itertools.combinations(range(1, m + 1), 3)]
    return ConstructedGraph(
        name=f"T({m})",
        graph=graph,
        labels=tuple(f"{{{a},{b}}}" for a, b in pairs),
        expected_params=SrgParams(v=m * (m - 1) // 2, k=2 * (m - 2), lam=m - 2, mu=4),
        lines=_dedupe_lines(len(pairs), lines),
    )


def lattice(n: int) -> ConstructedGraph:
    """L2(n): cells of an n x n grid, adjacent when in the same row or column"""
    if n < 2:
        raise ParamOutOfRangeError(f"lattice graph needs n >= 2, got {n}")
    cells = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    graph = _from_adjacency(len(cells), lambda u, w: cells[u][0] == cells[w][0] or cells[u][1] == cells[w][1])
    sep = "" if n <= 9 else "."
    return ConstructedGraph(
        name=f"L2({n})",
        graph=graph,
        labels=tuple(f"{a}{sep}{b}" for a, b in cells),
        expected_params=SrgParams(v=n * n, k=2 * (n - 1), lam=n - 2, mu=2),
    )


def latin_square_graph(L: Sequence[Sequence[int]], name: Optional[str] = None) -> ConstructedGraph:
    """Cells (i, j, L[i][j]) adjacent when they agree in exactly one coordinate"""
    n = len(L)
    symbols = set(range(n))
    if n < 2 or any(len(row) != n for row in L):
        raise NotLatinSquareError(f"expected an n x n array with n >= 2")
    if any(set(row) != symbols for row in L) or any({L[i][j] for i in range(n)} != symbols for j in range(n)):
        raise NotLatinSquareError("every row and column must be a permutation of 0..n-1")
    cells = [(i, j, L[i][j]) for i in range(n) for j in range(n)]
    graph = _from_adjacency(
        len(cells), lambda u, w: sum(x == y for x, y in zip(cells[u], cells[w])) == 1
    )
    return ConstructedGraph(
        name=name or f"latin({n})",
        graph=graph,
        labels=tuple(f"[{i + 1},{j + 1},{s + 1}]" for i, j, s in cells),
        expected_params=SrgParams(v=n * n, k=3 * (n - 1), lam=n, mu=6),
    )


def cayley_latin(n: int) -> ConstructedGraph:
    """Latin square graph of the cyclic group table L(i,j) = i+j mod n"""
    if n < 2:
        raise NotLatinSquareError(f"latin square needs n >= 2, got {n}")
    return latin_square_graph([[(i + j) % n for j in range(n)] for i in range(n)], name=f"cayley_latin({n})")


def paley(q: int) -> ConstructedGraph:
    """Paley graph: x ~ y iff x - y is a nonzero square in GF(q)"""
    if q % 4 != 1:
        raise BadResidueClassError(f"Paley graph needs q = 1 mod 4, got {q}")
    F = field_of_order(q)
    graph = _from_adjacency(q, lambda u, w: F.sub(u, w) in F.squares)
    return ConstructedGraph(
        name=f"Paley({q})",
        graph=graph,
        labels=tuple(F.format(a) for a in range(q)),
        expected_params=SrgParams(v=q, k=(q - 1) // 2, lam=(q - 5) // 4, mu=(q - 1) // 4),
    )


def symplectic_graph(r: int, q: int) -> ConstructedGraph:
    """Sp(2r,q): projective points of F_q^{2r}, adjacent when x^t M y != 0"""
    if r < 2:
        raise ParamOutOfRangeError(f"symplectic graph needs r >= 2, got {r}")
    try:
        F = field_of_order(q)
    except UnsupportedOrderError as e:
        raise ParamOutOfRangeError(str(e)) from e
    v = (q ** (2 * r) - 1) // (q - 1)
    if v > MAX_VERTICES:
        raise ParamOutOfRangeError(f"Sp({2 * r},{q}) has {v} vertices, above {MAX_VERTICES}")

    form = SymplecticForm(F, r)
    points = projective_points(F, 2 * r)
    coords = [p.coords for p in points]
    index = {c: i for i, c in enumerate(coords)}
    graph = _from_adjacency(v, lambda u, w: form.pair_values(coords[u], coords[w]) != 0)

    lines = []
    for u in range(v):
        for w in iter_bits(graph.adj[u] >> (u + 1) << (u + 1)):
            line = {u, w}
            for c in range(1, q):
                combo = vector_add(F, coords[u], vector_scale(F, c, coords[w]))
                line.add(index[normalize(F, combo).coords])
            lines.append(line)

    k = q ** (2 * r - 1)
    lam = q ** (2 * r - 2) * (q - 1)
    return ConstructedGraph(
        name=f"Sp({2 * r},{q})",
        graph=graph,
        labels=tuple(p.label() for p in points),
        expected_params=SrgParams(v=v, k=k, lam=lam, mu=lam),
        lines=_dedupe_lines(v, lines),
    )


def quadric_form(sign: str, x: Sequence[int]) -> int:
    """Q+(x) = x1x2 + x3x4 + ...; Q-(x) adds x1^2 + x2^2 (over GF(2))"""
    value = sum(x[i] * x[i + 1] for i in range(0, len(x), 2))
    if sign == "-":
        value += x[0] + x[1]
    return value % 2


def quadric_graph(sign: str, r: int) -> ConstructedGraph:
    """O+(2r,2) / O-(2r,2): Sp(2r,2) induced on the vectors with Q(x) = 1"""
    if sign not in ("+", "-"):
        raise ParamOutOfRangeError(f"sign must be '+' or '-', got {sign!r}")
    if r < 2:
        raise ParamOutOfRangeError(f"quadric graph needs r >= 2, got {r}")
    sp = symplectic_graph(r, 2)
    F = field_make(2, 1)
    points = projective_points(F, 2 * r)
    keep = [i for i, p in enumerate(points) if quadric_form(sign, p.coords) == 1]
    graph = sp.graph.induced(keep)
    coords = [points[i].coords for i in keep]
    index = {c: i for i, c in enumerate(coords)}

    lines = []
    for u in range(graph.n):
        for w in iter_bits(graph.adj[u] >> (u + 1) << (u + 1)):
            lines.append((u, w, index[vector_add(F, coords[u], coords[w])]))

    s = 1 if sign == "+" else -1
    return ConstructedGraph(
        name=f"O{sign}({2 * r},2)",
        graph=graph,
        labels=tuple(sp.labels[i] for i in keep),
        expected_params=SrgParams(
            v=2 ** (2 * r - 1) - s * 2 ** (r - 1),
            k=2 ** (2 * r - 2) - s * 2 ** (r - 1),
            lam=2 ** (2 * r - 3) - s * 2 ** (r - 2),
            mu=2 ** (2 * r - 3) - s * 2 ** (r - 1),
        ),
        lines=_dedupe_lines(graph.n, lines),
    )


def _twenty_seven_labels() -> List[Tuple[str, Tuple[int, ...]]]:
    vertices = [("a", (i,)) for i in range(1, 7)] + [("b", (i,)) for i in range(1, 7)]
    vertices += [("c", pair) for pair in itertools.combinations(range(1, 7), 2)]
    return vertices


def _lines_meet(x, y) -> bool:
    (tx, ix), (ty, iy) = x, y
    if tx == "c" and ty == "c":
        return not set(ix) & set(iy)
    if tx == "c" or ty == "c":
        single = iy if tx == "c" else ix
        pair = ix if tx == "c" else iy
        return single[0] in pair
    return tx != ty and ix != iy


def twenty_seven_lines() -> ConstructedGraph:
    """Intersection graph of the 27 lines on a cubic surface"""
    vertices = _twenty_seven_labels()
    graph = _from_adjacency(len(vertices), lambda u, w: _lines_meet(vertices[u], vertices[w]))
    labels = tuple(f"{t}{''.join(map(str, idx))}" for t, idx in vertices)
    return ConstructedGraph("27-lines", graph, labels, SrgParams(v=27, k=10, lam=1, mu=5))


def schlafli() -> ConstructedGraph:
    lines = twenty_seven_lines()
    return ConstructedGraph("Schlafli", complement(lines.graph), lines.labels, SrgParams(v=27, k=16, lam=10, mu=8))


def clebsch() -> ConstructedGraph:
    """Folded 5-cube: F_2^4, adjacent at Hamming distance 1 or 4"""
    graph = _from_adjacency(16, lambda u, w: (u ^ w).bit_count() in (1, 4))
    labels = tuple(format(x, "04b") for x in range(16))
    return _validated(ConstructedGraph("Clebsch", graph, labels, SrgParams(v=16, k=5, lam=0, mu=2)))


def shrikhande() -> ConstructedGraph:
    """Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1)"""
    cells = [(a, b) for a in range(4) for b in range(4)]
    steps = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}

    def adjacent(u, w):
        return ((cells[u][0] - cells[w][0]) % 4, (cells[u][1] - cells[w][1]) % 4) in steps

    graph = _from_adjacency(16, adjacent)
    labels = tuple(f"{a}{b}" for a, b in cells)
    return _validated(ConstructedGraph("Shrikhande", graph, labels, SrgParams(v=16, k=6, lam=2, mu=2)))


def petersen() -> ConstructedGraph:
    """Complement of T(5): 2-subsets of {1..5}, adjacent when disjoint"""
    t5 = triangular(5)
    return ConstructedGraph("Petersen", complement(t5.graph), t5.labels, SrgParams(v=10, k=3, lam=0, mu=1))


def seidel_switch(G: Graph, X: VertexSet) -> Graph:
    """Complement exactly the edges between X and its complement"""
    inside = X.bits
    outside = G.all_bits & ~inside
    rows = []
    for u, row in enumerate(G.adj):
        flip = outside if inside >> u & 1 else inside
        rows.append(row ^ flip)
    return Graph(G.n, rows)


# Edge sets of K8 whose T(8)-vertices form the switching sets
CHANG_SWITCHING_EDGES: Dict[int, Tuple[Tuple[int, int], ...]] = {
    1: ((1, 2), (3, 4), (5, 6), (7, 8)),
    2: ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (1, 8)),
    3: ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7), (7, 8), (4, 8)),
}


def chang(i: int) -> ConstructedGraph:
    """Chang graph i: T(8) Seidel-switched on a matching, an 8-cycle or C3+C5"""
    if i not in CHANG_SWITCHING_EDGES:
        raise ParamOutOfRangeError(f"Chang graph index must be 1, 2 or 3, got {i}")
    t8 = triangular(8)
    X = t8.vertex_set(f"{{{a},{b}}}" for a, b in CHANG_SWITCHING_EDGES[i])
    graph = seidel_switch(t8.graph, X)
    return _validated(ConstructedGraph(f"Chang({i})", graph, t8.labels, SrgParams(v=28, k=12, lam=6, mu=4)))


def complement_of(cg: ConstructedGraph) -> ConstructedGraph:
    """Labelled complement with complementary expected parameters; lines are dropped"""
    return ConstructedGraph(
        name=f"complement({cg.name})",
        graph=complement(cg.graph),
        labels=cg.labels,
        expected_params=complement_params(cg.expected_params),
    )


def gq_point_graph(q: int) -> ConstructedGraph:
    """GQ(q,q) point graph as the complement of Sp(4,q)"""
    cg = complement_of(symplectic_graph(2, q))
    return ConstructedGraph(f"GQ({q},{q})", cg.graph, cg.labels, cg.expected_params)
