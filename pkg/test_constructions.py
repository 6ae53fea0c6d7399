"""
Tests for the graph families and the family registry
"""

import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from app.analysis.srg import srg_check
from app.catalog.registry import build_family, get_registry
from app.core.errors import BadResidueClassError, LabelError, NotLatinSquareError, ParamOutOfRangeError
from app.graphs import constructions
from app.graphs.graph import VertexSet, graph_from_edges, neighborhood
from app.models import FamilySpec, SrgParams


def params(v, k, lam, mu):
    return SrgParams(v=v, k=k, lam=lam, mu=mu)


FAMILIES = [
    ({"family": "Triangular", "m": 4}, (6, 4, 2, 4)),
    ({"family": "Triangular", "m": 5}, (10, 6, 3, 4)),
    ({"family": "Triangular", "m": 8}, (28, 12, 6, 4)),
    ({"family": "Lattice", "n": 3}, (9, 4, 1, 2)),
    ({"family": "Lattice", "n": 5}, (25, 8, 3, 2)),
    ({"family": "LatinSquare", "n": 4}, (16, 9, 4, 6)),
    ({"family": "LatinSquare", "n": 5}, (25, 12, 5, 6)),
    ({"family": "Paley", "q": 5}, (5, 2, 0, 1)),
    ({"family": "Paley", "q": 9}, (9, 4, 1, 2)),
    ({"family": "Paley", "q": 25}, (25, 12, 5, 6)),
    ({"family": "Paley", "q": 29}, (29, 14, 6, 7)),
    ({"family": "Symplectic", "r": 2, "q": 2}, (15, 8, 4, 4)),
    ({"family": "Symplectic", "r": 2, "q": 3}, (40, 27, 18, 18)),
    ({"family": "Symplectic", "r": 3, "q": 2}, (63, 32, 16, 16)),
    ({"family": "HyperbolicQuadric", "r": 3}, (28, 12, 6, 4)),
    ({"family": "EllipticQuadric", "r": 2}, (10, 6, 3, 4)),
    ({"family": "EllipticQuadric", "r": 3}, (36, 20, 10, 12)),
    ({"family": "TwentySevenLines"}, (27, 10, 1, 5)),
    ({"family": "Schlafli"}, (27, 16, 10, 8)),
    ({"family": "Clebsch"}, (16, 5, 0, 2)),
    ({"family": "Shrikhande"}, (16, 6, 2, 2)),
    ({"family": "Petersen"}, (10, 3, 0, 1)),
    ({"family": "Chang", "index": 1}, (28, 12, 6, 4)),
    ({"family": "Chang", "index": 2}, (28, 12, 6, 4)),
    ({"family": "Chang", "index": 3}, (28, 12, 6, 4)),
    ({"family": "ComplementOf", "inner": {"family": "Symplectic", "r": 2, "q": 2}}, (15, 6, 1, 3)),
    ({"family": "ComplementOf", "inner": {"family": "Triangular", "m": 7}}, (21, 10, 3, 6)),
]


@pytest.mark.parametrize("spec,expected", FAMILIES, ids=lambda x: FamilySpec.model_validate(x).label() if isinstance(x, dict) else None)
def test_family_parameters(spec, expected):
    cg = build_family(FamilySpec.model_validate(spec))
    assert cg.expected_params == params(*expected)
    assert srg_check(cg.graph) == cg.expected_params
    assert len(cg.labels) == cg.n == expected[0]


@pytest.mark.parametrize("spec,count,size", [
    ({"family": "Triangular", "m": 6}, 20, 3),
    ({"family": "Symplectic", "r": 2, "q": 2}, 20, 3),
    ({"family": "Symplectic", "r": 2, "q": 3}, 90, 4),
    ({"family": "HyperbolicQuadric", "r": 3}, 56, 3),
    ({"family": "EllipticQuadric", "r": 3}, 120, 3),
])
def test_lines_partition_the_edges(spec, count, size):
    cg = build_family(FamilySpec.model_validate(spec))
    assert len(cg.lines) == count
    assert {len(line) for line in cg.lines} == {size}
    covered = set()
    for line in cg.lines:
        for pair in itertools.combinations(line.to_list(), 2):
            assert pair not in covered
            covered.add(pair)
    assert covered == set(cg.graph.edges())


def test_triangular_labels_and_lines():
    cg = constructions.triangular(5)
    assert cg.labels[0] == "{1,2}"
    first = cg.label_list(cg.lines[0])
    assert first == ["{1,2}", "{1,3}", "{2,3}"]


def test_symplectic_labels_are_normalised_points():
    cg = constructions.symplectic_graph(2, 3)
    assert cg.labels[0] == "(1,0,0,0)"
    assert all(label.startswith("(") for label in cg.labels)


def test_petersen_is_the_complement_of_t5():
    t5 = constructions.triangular(5)
    cg = constructions.complement_of(t5)
    assert cg.graph == constructions.petersen().graph
    assert cg.lines is None
    assert nx.is_isomorphic(cg.graph.to_networkx(), nx.petersen_graph())


def test_shrikhande_is_not_the_lattice():
    shrikhande = constructions.shrikhande().graph.to_networkx()
    l24 = constructions.lattice(4).graph.to_networkx()
    assert not nx.is_isomorphic(shrikhande, l24)


def test_gq_point_graph():
    cg = constructions.gq_point_graph(2)
    assert cg.name == "GQ(2,2)"
    assert cg.expected_params == params(15, 6, 1, 3)


def test_chang_graphs_differ_from_t8():
    t8 = constructions.triangular(8).graph
    for i in (1, 2, 3):
        G = constructions.chang(i).graph
        assert G != t8
        changed = sum(1 for u in range(28) if G.adj[u] != t8.adj[u])
        assert changed == 28



def test_schlafli_neighbourhoods_of_three_vertex_sets():
    G = constructions.schlafli().graph
    triangles, paths = set(), set()
    for trio in itertools.combinations(range(G.n), 3):
        edges = sum(1 for u, w in itertools.combinations(trio, 2) if G.has_edge(u, w))
        if edges < 2:
            continue
        size = len(neighborhood(G, VertexSet.from_iterable(G.n, trio)))
        (triangles if edges == 3 else paths).add(size)
    # an edge has 2k - lambda - 2 = 20
    assert triangles == {21}
    assert paths == {23}


@st.composite
def small_graph_and_set(draw):
    n = draw(st.integers(1, 10))
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = graph_from_edges(n, [p for p, k in zip(pairs, keep) if k])
    X = VertexSet.from_iterable(n, draw(st.sets(st.integers(0, n - 1))))
    return G, X


@given(small_graph_and_set())
def test_seidel_switch_is_an_involution(case):
    G, X = case
    H = constructions.seidel_switch(G, X)
    assert constructions.seidel_switch(H, X) == G
    for u in X:
        for w in X:
            if u != w:
                assert H.has_edge(u, w) == G.has_edge(u, w)


def test_label_lookup():
    cg = constructions.triangular(5)
    assert cg.index_of("{1,2}") == 0
    with pytest.raises(LabelError):
        cg.index_of("{9,9}")


def test_invalid_family_parameters():
    with pytest.raises(ParamOutOfRangeError):
        constructions.triangular(3)
    with pytest.raises(ParamOutOfRangeError):
        constructions.lattice(1)
    with pytest.raises(BadResidueClassError):
        constructions.paley(7)
    with pytest.raises(ParamOutOfRangeError):
        constructions.chang(4)
    with pytest.raises(ParamOutOfRangeError):
        constructions.symplectic_graph(1, 2)
    with pytest.raises(ParamOutOfRangeError):
        constructions.symplectic_graph(3, 4)
    with pytest.raises(ParamOutOfRangeError):
        constructions.symplectic_graph(2, 6)
    with pytest.raises(ParamOutOfRangeError):
        constructions.quadric_graph("x", 2)


def test_latin_square_validation():
    with pytest.raises(NotLatinSquareError):
        constructions.latin_square_graph([[0, 1], [0, 1]])
    with pytest.raises(NotLatinSquareError):
        constructions.latin_square_graph([[0, 1, 2], [1, 2, 0]])
    cg = constructions.latin_square_graph([[0, 1, 2], [2, 0, 1], [1, 2, 0]])
    assert srg_check(cg.graph) == params(9, 6, 3, 6)


def test_family_spec_validation_and_labels():
    with pytest.raises(ValidationError):
        FamilySpec(family="Triangular")
    with pytest.raises(ValidationError):
        FamilySpec(family="Symplectic", r=2)
    spec = FamilySpec(family="ComplementOf", inner=FamilySpec(family="Lattice", n=4))
    assert spec.label() == "complement(L2(4))"
    assert FamilySpec(family="HyperbolicQuadric", r=3).label() == "O+(6,2)"


def test_registry_caches_by_spec():
    spec = FamilySpec(family="Triangular", m=6)
    assert build_family(spec) is build_family(FamilySpec(family="Triangular", m=6))
    registry = get_registry()
    registry.clear()
    assert build_family(spec) is not None
