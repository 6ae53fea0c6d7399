"""
Tests for GF(q) arithmetic, projective points and the symplectic form
"""

import pytest
from hypothesis import given, strategies as st

from app.algebra.finite_field import Field, field_of_order, is_irreducible, poly_mod
from app.algebra.projective import SymplecticForm, normalize, projective_points, symplectic_pair, vector_scale
from app.catalog.registry import build_family
from app.core.errors import DimensionMismatchError, NotPrimeError, UnsupportedOrderError
from app.models import FamilySpec

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 29, 32, 49, 64]


@pytest.mark.parametrize("q", ORDERS)
def test_field_structure(q):
    F = field_of_order(q)
    assert F.q == q
    assert len(F.squares) == (q - 1 if q % 2 == 0 else (q - 1) // 2)
    powers = {F.power(F.generator, k) for k in range(1, q)}
    assert powers == set(range(1, q))
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
        assert F.power(a, q) == a


def test_bad_orders():
    with pytest.raises(NotPrimeError):
        Field(4)
    with pytest.raises(UnsupportedOrderError):
        Field(2, 7)
    for q in (1, 6, 12, 128):
        with pytest.raises(UnsupportedOrderError):
            field_of_order(q)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_of_order(5).inv(0)


@given(st.sampled_from([4, 9, 25, 27]), st.data())
def test_element_arithmetic(q, data):
    F = field_of_order(q)
    a, b, c = (F(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if not b.is_zero():
        assert (a / b) * b == a
        assert b ** -1 == b.inverse()


def test_integer_coercion_reduces_prime_fields():
    F = field_of_order(7)
    assert F(10).value == 3
    assert (F(3) + 5).value == 1
    assert (2 - F(5)).value == 4


def test_elements_of_different_fields_do_not_mix():
    with pytest.raises(ValueError):
        field_of_order(5)(1) + field_of_order(7)(1)


def test_format():
    assert field_of_order(4).format(2) == "x"
    assert field_of_order(4).format(3) == "x+1"
    assert field_of_order(9).format(5) == "x+2"
    assert field_of_order(7).format(5) == "5"
    assert field_of_order(8).format(0) == "0"


def test_polynomial_helpers():
    assert is_irreducible(2, [1, 1, 1])
    assert not is_irreducible(2, [1, 0, 1])
    assert is_irreducible(3, [1, 2, 0, 1])
    assert poly_mod([0, 0, 1], [1, 1, 1], 2) == [1, 1]


@pytest.mark.parametrize("q,d,count", [(2, 4, 15), (3, 4, 40), (2, 6, 63), (4, 3, 21)])
def test_projective_point_count(q, d, count):
    points = projective_points(field_of_order(q), d)
    assert len(points) == count
    assert len({p.coords for p in points}) == count
    assert all(p.coords[next(i for i, c in enumerate(p.coords) if c)] == 1 for p in points)


def test_normalize():
    F = field_of_order(5)
    assert normalize(F, (0, 2, 4)).coords == (0, 1, 2)
    with pytest.raises(ValueError):
        normalize(F, (0, 0))


def test_symplectic_form_matrix():
    M = SymplecticForm(field_of_order(3), 1)
    assert [[x.value for x in row] for row in M.matrix()] == [[0, 2], [1, 0]]


@given(st.sampled_from([2, 3, 4]), st.data())
def test_symplectic_form_is_alternating(q, data):
    F = field_of_order(q)
    M = SymplecticForm(F, 2)
    vec = st.tuples(*[st.integers(0, q - 1)] * 4)
    x, y = data.draw(vec), data.draw(vec)
    assert symplectic_pair(M, x, x).is_zero()
    assert symplectic_pair(M, x, y) == -symplectic_pair(M, y, x)


def test_symplectic_pair_dimension_check():
    M = SymplecticForm(field_of_order(2), 2)
    with pytest.raises(DimensionMismatchError):
        symplectic_pair(M, (1, 0), (0, 1, 0, 0))


@given(st.sampled_from([3, 4, 5]), st.data())
def test_symplectic_adjacency_ignores_the_representative(q, data):
    cg = build_family(FamilySpec(family="Symplectic", r=2, q=q))
    F = field_of_order(q)
    M = SymplecticForm(F, 2)
    points = projective_points(F, 4)
    u = data.draw(st.integers(0, cg.n - 1))
    w = data.draw(st.integers(0, cg.n - 1))
    c = data.draw(st.integers(1, q - 1))
    d = data.draw(st.integers(1, q - 1))
    x = vector_scale(F, c, points[u].coords)
    y = vector_scale(F, d, points[w].coords)
    assert normalize(F, x) == points[u]
    assert (M.pair_values(x, y) != 0) == cg.graph.has_edge(u, w)
