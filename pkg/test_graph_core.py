"""
Tests for the bitset graph and the graph6 codec
"""

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from app.core.errors import (
    DuplicateEdgeError,
    GraphTooLargeError,
    IndexOutOfRangeError,
    MalformedHeaderError,
    NonCanonicalPaddingError,
    SelfLoopError,
    TruncatedPayloadError,
)
from app.graphs.graph import (
    Graph,
    VertexSet,
    complement,
    components,
    graph_from_edges,
    graph_from_networkx,
    neighborhood,
)
from app.graphs.graph6 import graph6_decode, graph6_encode, read_graph6_file, write_graph6_file


@st.composite
def graphs(draw, max_n=20, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def path(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


# Vertex sets

def test_vertex_set_operations():
    X = VertexSet.from_iterable(6, [0, 2, 4])
    Y = VertexSet.from_iterable(6, [2, 3])
    assert (X | Y).to_list() == [0, 2, 3, 4]
    assert (X & Y).to_list() == [2]
    assert (X - Y).to_list() == [0, 4]
    assert X.complement().to_list() == [1, 3, 5]
    assert len(X) == 3 and 4 in X and 5 not in X
    assert VertexSet.from_iterable(6, [2]).issubset(X)


def test_vertex_set_rejects_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        VertexSet.from_iterable(4, [4])
    with pytest.raises(IndexOutOfRangeError):
        VertexSet(3, 0b1000)


def test_vertex_sets_of_different_graphs_do_not_mix():
    with pytest.raises(ValueError):
        VertexSet(3, 1) | VertexSet(4, 1)


# Graph construction

def test_edge_list_validation():
    with pytest.raises(SelfLoopError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(DuplicateEdgeError):
        graph_from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(IndexOutOfRangeError):
        graph_from_edges(3, [(0, 3)])


def test_asymmetric_rows_are_rejected():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])


def test_too_many_vertices():
    with pytest.raises(GraphTooLargeError):
        Graph(1025, [0] * 1025)


def test_graph_is_immutable():
    G = path(3)
    with pytest.raises(AttributeError):
        G.foo = 1


def test_neighbourhood_and_components_of_a_path():
    G = path(6)
    assert neighborhood(G, VertexSet.from_iterable(6, [2, 3])).to_list() == [1, 4]
    parts = components(G, VertexSet.from_iterable(6, [0, 1, 3, 4, 5]))
    assert [c.to_list() for c in parts] == [[0, 1], [3, 4, 5]]
    assert G.is_connected() and not G.is_complete()


def test_induced_subgraph_relabels():
    G = path(5)
    H = G.induced([1, 2, 4])
    assert H.n == 3
    assert H.edges() == [(0, 1)]


@given(graphs())
def test_complement_is_an_involution(G):
    H = complement(G)
    assert complement(H) == G
    assert G.num_edges + H.num_edges == G.n * (G.n - 1) // 2


@given(graphs())
def test_networkx_conversion_round_trips(G):
    assert graph_from_networkx(G.to_networkx()) == G


@given(graphs(max_n=12))
def test_components_match_networkx(G):
    ours = sorted(tuple(c.to_list()) for c in components(G, G.vertices()))
    theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(G.to_networkx()))
    assert ours == theirs


# graph6

def test_graph6_small_examples():
    assert graph6_encode(Graph(0, [])) == b"?\n"
    assert graph6_encode(Graph(1, [0])) == b"@\n"
    assert graph6_encode(graph_from_edges(2, [(0, 1)])) == b"A_\n"
    assert graph6_encode(Graph(2, [0, 0])) == b"A?\n"


def test_graph6_petersen_matches_nauty_string():
    g = nx.petersen_graph()
    G = graph_from_networkx(g)
    assert graph6_encode(G) == b"IheA@GUAo\n"
    assert graph6_decode("IheA@GUAo") == G


@given(graphs(max_n=70, min_n=1))
def test_graph6_agrees_with_networkx(G):
    encoded = graph6_encode(G)
    assert encoded == nx.to_graph6_bytes(G.to_networkx(), header=False)
    assert graph6_decode(encoded) == G


def test_graph6_long_header():
    G = path(63)
    encoded = graph6_encode(G)
    assert encoded[:4] == bytes([126, 63, 63, 126])
    assert graph6_decode(encoded) == G


def test_graph6_accepts_header_and_crlf():
    assert graph6_decode(b">>graph6<<A_\r\n").num_edges == 1


def test_graph6_errors():
    with pytest.raises(MalformedHeaderError):
        graph6_decode(b"")
    with pytest.raises(MalformedHeaderError):
        graph6_decode(b"A ")
    with pytest.raises(TruncatedPayloadError):
        graph6_decode(b"A")
    with pytest.raises(TruncatedPayloadError):
        graph6_decode(b"A__")
    with pytest.raises(NonCanonicalPaddingError):
        graph6_decode(b"Aa")
    with pytest.raises(MalformedHeaderError):
        graph6_decode(b"~??A")


def test_graph6_files(tmp_path):
    target = tmp_path / "graphs.g6"
    gs = [path(4), complement(path(5))]
    assert write_graph6_file(target, gs) == 2
    lines = read_graph6_file(target)
    assert [graph6_decode(line) for line in lines] == gs
