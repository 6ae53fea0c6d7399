"""
Tests for partial linear spaces, perps, hyperbolic lines and the clique-neighbourhood cut test
"""

from dataclasses import replace

import pytest

from app.analysis.connectivity import clique_cut_certificate, kappa2_exact
from app.analysis.geometry import (
    PartialLinearSpace,
    check_axioms,
    delta_counterexample_test,
    hyperbolic_line,
    hyperbolic_lines,
    isotropic_line_space,
    perp_of,
    perp_sets,
    point_graph,
    regular_pair,
    space_from_constructed,
)
from app.analysis.srg import srg_check
from app.catalog.registry import build_family
from app.core.errors import AdjacentPairError, GeometryError, NoLinesError
from app.graphs import constructions
from app.graphs.graph import VertexSet, complement, iter_bits
from app.models import FamilySpec


def family(tag, **fields):
    return build_family(FamilySpec(family=tag, **fields))


def first_non_neighbour(G, x):
    return next(iter_bits(G.all_bits & ~G.adj[x] & ~(1 << x)))


def test_from_lines_normalises_and_detects_order():
    S = PartialLinearSpace.from_lines(4, [[1, 0], (0, 1), [2, 3], [3, 2, 2]])
    assert S.lines == ((0, 1), (2, 3))
    assert S.order == (1, 0)
    assert S.lines_through(2) == [(2, 3)]
    assert PartialLinearSpace.from_lines(3, [[0, 1], [0, 1, 2]]).order is None


def test_triangle_space_of_t5(t5):
    S = space_from_constructed(t5)
    assert S.order == (2, 2)
    assert point_graph(S) == t5.graph
    report = check_axioms(S)
    assert report.partial_linear and report.copolar and report.delta
    assert not report.gq


def test_space_needs_lines(lattice4):
    with pytest.raises(NoLinesError):
        space_from_constructed(lattice4)


def test_repeated_pair_breaks_partial_linearity():
    S = PartialLinearSpace.from_lines(4, [[0, 1, 2], [0, 1, 3]])
    assert not check_axioms(S).partial_linear


@pytest.mark.parametrize("q,points", [(2, 15), (3, 40)])
def test_isotropic_lines_form_a_quadrangle(q, points):
    W = isotropic_line_space(q)
    assert W.n_points == points
    assert len(W.lines) == points
    assert W.order == (q, q)
    report = check_axioms(W)
    assert report.gq and report.partial_linear
    assert point_graph(W) == complement(constructions.symplectic_graph(2, q).graph)


def test_perp_of_empty_set_is_everything(petersen):
    assert perp_of(petersen.graph, VertexSet.empty(10)) == petersen.graph.vertices()


def test_perp_sets_need_distinct_vertices(petersen):
    with pytest.raises(ValueError):
        perp_sets(petersen.graph, 0, 0)


@pytest.mark.parametrize("q", [2, 3])
def test_every_pair_of_the_symplectic_quadrangle_is_regular(q):
    G = constructions.gq_point_graph(q).graph
    x = 0
    y = first_non_neighbour(G, x)
    sets = perp_sets(G, x, y)
    assert len(sets.perp) == q + 1
    assert {x, y} <= set(sets.perp_perp)
    pair = regular_pair(G, x, y, q)
    assert pair.regular and pair.induced_complete_bipartite


def test_regular_pair_rejects_collinear_points():
    G = constructions.gq_point_graph(2).graph
    w = next(iter_bits(G.adj[0]))
    with pytest.raises(AdjacentPairError):
        regular_pair(G, 0, w, 2)


@pytest.mark.parametrize("r,q", [(2, 2), (2, 3)])
def test_hyperbolic_lines_are_the_symplectic_lines(r, q):
    cg = constructions.symplectic_graph(r, q)
    found = {tuple(line.to_list()) for line in hyperbolic_lines(cg.graph)}
    assert found == {tuple(line.to_list()) for line in cg.lines}


def test_hyperbolic_line_needs_an_edge(petersen):
    G = petersen.graph
    with pytest.raises(GeometryError):
        hyperbolic_line(G, 0, first_non_neighbour(G, 0))


@pytest.mark.parametrize("spec,applies,predicted", [
    ({"family": "Triangular", "m": 5}, False, 6),
    ({"family": "Triangular", "m": 6}, True, 9),
    ({"family": "Triangular", "m": 8}, True, 15),
    ({"family": "Symplectic", "r": 2, "q": 2}, True, 9),
    ({"family": "Symplectic", "r": 2, "q": 3}, True, 32),
    ({"family": "EllipticQuadric", "r": 3}, True, 27),
])
def test_delta_counterexample_test(spec, applies, predicted):
    cg = build_family(FamilySpec.model_validate(spec))
    test = delta_counterexample_test(cg)
    assert test.applies is applies
    assert test.predicted_cut_size == predicted
    if applies:
        cert = clique_cut_certificate(cg, 0)
        assert cert and cert.s == predicted


def test_delta_test_needs_uniform_lines(t5):
    edge = VertexSet.from_iterable(t5.n, [0, 1])
    mixed = replace(t5, lines=(t5.lines[0], edge))
    with pytest.raises(GeometryError):
        delta_counterexample_test(mixed)
    with pytest.raises(NoLinesError):
        delta_counterexample_test(family("Lattice", n=4))


LINE_SPACES = [
    {"family": "Triangular", "m": 6},
    {"family": "Triangular", "m": 7},
    {"family": "Symplectic", "r": 2, "q": 2},
    {"family": "Symplectic", "r": 2, "q": 3},
    {"family": "EllipticQuadric", "r": 3},
    {"family": "HyperbolicQuadric", "r": 3},
]


@pytest.mark.parametrize("spec", LINE_SPACES, ids=lambda s: FamilySpec.model_validate(s).label())
def test_every_line_gives_a_cut_of_the_predicted_size(spec):
    cg = build_family(FamilySpec.model_validate(spec))
    test = delta_counterexample_test(cg)
    assert test.applies
    assert test.predicted_cut_size < srg_check(cg.graph).edge_bound
    for i in range(len(cg.lines)):
        cert = clique_cut_certificate(cg, i)
        assert cert, f"line {i}: {cert.reason}"
        assert cert.s == test.predicted_cut_size
        assert cert.A == cg.lines[i]


@pytest.mark.parametrize("spec,kappa2", [
    ({"family": "Triangular", "m": 6}, 9),
    ({"family": "Triangular", "m": 7}, 12),
    ({"family": "Symplectic", "r": 2, "q": 2}, 9),
    pytest.param({"family": "HyperbolicQuadric", "r": 3}, 15, marks=pytest.mark.slow),
])
def test_kappa2_is_at_most_the_line_cut(spec, kappa2):
    cg = build_family(FamilySpec.model_validate(spec))
    test = delta_counterexample_test(cg)
    p = srg_check(cg.graph)
    result = kappa2_exact(cg.graph, params=p, seeds=cg.lines)
    assert result.closed
    assert result.value <= test.predicted_cut_size < p.edge_bound
    assert result.value == kappa2
