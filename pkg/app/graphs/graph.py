"""
Dense immutable graphs over integer bitrows
Vertices are 0..n-1; row u of the adjacency is an int with bit v set iff u~v
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np

from app.core.config import MAX_VERTICES
from app.core.errors import (
    DuplicateEdgeError,
    GraphTooLargeError,
    IndexOutOfRangeError,
    SelfLoopError,
)


def iter_bits(bits: int) -> Iterator[int]:
    """Yield set bit positions in increasing order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of an n-vertex graph, stored as a bitmask"""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise IndexOutOfRangeError(f"vertex set exceeds 0..{self.n - 1}")

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for u in vertices:
            if not 0 <= u < n:
                raise IndexOutOfRangeError(f"vertex {u} not in 0..{n - 1}")
            bits |= 1 << u
        return cls(n, bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, u: int) -> bool:
        return 0 <= u < self.n and bool(self.bits >> u & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError(f"vertex sets over {self.n} and {other.n} vertices")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def to_list(self) -> List[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


class Graph:
    """Immutable simple undirected graph"""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n > MAX_VERTICES:
            raise GraphTooLargeError(f"{n} vertices exceeds the supported {MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        rows = tuple(int(r) for r in adj)
        for u, row in enumerate(rows):
            if row >> n or row < 0:
                raise IndexOutOfRangeError(f"row {u} references vertices beyond {n - 1}")
            if row >> u & 1:
                raise SelfLoopError(f"vertex {u} is adjacent to itself")
            for w in iter_bits(row):
                if not rows[w] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{w})")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def all_bits(self) -> int:
        return (1 << self._n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.num_edges})"

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._adj]

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self._adj[u] >> w & 1)

    def neighbors(self, u: int) -> VertexSet:
        return VertexSet(self._n, self._adj[u])

    def closed_neighborhood(self, u: int) -> VertexSet:
        return VertexSet(self._n, self._adj[u] | 1 << u)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, w) for u in range(self._n) for w in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    def vertices(self) -> VertexSet:
        return VertexSet.full(self._n)

    def neighborhood_bits(self, bits: int) -> int:
        """Open neighbourhood of a bitmask"""
        out = 0
        for u in iter_bits(bits):
            out |= self._adj[u]
        return out & ~bits

    def component_bits(self, within: int) -> List[int]:
        """Components of G[within] as bitmasks, ordered by least vertex"""
        comps = []
        rest = within
        adj = self._adj
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for u in iter_bits(frontier):
                    reach |= adj[u]
                frontier = reach & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self._n == 0 or len(self.component_bits(self.all_bits)) == 1

    def is_complete(self) -> bool:
        return all(row.bit_count() == self._n - 1 for row in self._adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so vertices[i] becomes i"""
        index = {u: i for i, u in enumerate(vertices)}
        rows = []
        for u in vertices:
            row = 0
            for w in iter_bits(self._adj[u]):
                j = index.get(w)
                if j is not None:
                    row |= 1 << j
            rows.append(row)
        return Graph(len(vertices), rows)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=float)
        for u, w in self.edges():
            a[u, w] = a[w, u] = 1.0
        return a

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g


def graph_from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; rejects loops, duplicates and bad indices"""
    rows = [0] * n
    for u, w in edges:
        if not (0 <= u < n and 0 <= w < n):
            raise IndexOutOfRangeError(f"edge ({u},{w}) outside 0..{n - 1}")
        if u == w:
            raise SelfLoopError(f"self-loop at {u}")
        if rows[u] >> w & 1:
            raise DuplicateEdgeError(f"edge ({u},{w}) given twice")
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph(n, rows)


def graph_from_networkx(g: nx.Graph) -> Graph:
    """Graph from a networkx graph with nodes 0..n-1"""
    n = g.number_of_nodes()
    return graph_from_edges(n, ((int(u), int(w)) for u, w in g.edges()))


def neighborhood(G: Graph, X: VertexSet) -> VertexSet:
    return VertexSet(G.n, G.neighborhood_bits(X.bits))


def components(G: Graph, within: VertexSet) -> List[VertexSet]:
    return [VertexSet(G.n, c) for c in G.component_bits(within.bits)]


def complement(G: Graph) -> Graph:
    full = G.all_bits
    return Graph(G.n, [full & ~row & ~(1 << u) for u, row in enumerate(G.adj)])
