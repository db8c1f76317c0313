import pytest
from hypothesis import given, settings, strategies as st

from superspecial.ns_lattice import (DivisorMatrix, basis_divisors, coords_to_matrix, delta,
                                     diagonal_matrix, divisor_expression, fiber_e1, fiber_e2,
                                     gram_matrix, intersect, j_of_delta, lattice_rows,
                                     matrix_compose, matrix_to_coords, pullback, self_int,
                                     signature, swap_matrix)
from superspecial.quat_core import AlgebraParams, OrderElement, ParamsMismatch

P5 = AlgebraParams(5, 3, 1)

coord = st.integers(min_value=-40, max_value=40)
small = st.integers(min_value=-4, max_value=4)
order_coords = st.tuples(coord, coord, coord, coord)
small_order = st.tuples(small, small, small, small)
divisor_coords = st.lists(coord, min_size=6, max_size=6)


def test_gram_p3(params3):
    rows = lattice_rows(gram_matrix(params3).matrix)
    assert rows[0] == (0, 1, 1, 1, 1, 1)
    assert rows[1] == (1, 0, 1, 5, 15, 1)
    assert rows[2][4] == 16
    assert all(rows[i][i] == 0 for i in range(6))


def test_gram_invariants(params):
    report = gram_matrix(params)
    rows = lattice_rows(report.matrix)
    assert report.rank == 6
    assert report.signature == (1, 5)
    assert report.determinant == -params.p ** 2
    for i in range(6):
        assert rows[i][i] % 2 == 0
        for j in range(6):
            assert rows[i][j] == rows[j][i]


def test_signature_hyperbolic_plane():
    assert signature([[0, 1], [1, 0]]) == (1, 1)
    assert signature([[2, 0, 0], [0, -3, 0], [0, 0, 0]]) == (1, 1)


def test_fibers(params3):
    e1, e2 = fiber_e1(params3), fiber_e2(params3)
    assert intersect(e1, e2) == 1
    assert self_int(e1) == self_int(e2) == 0
    assert basis_divisors(params3)[:2] == (e1, e2)


def test_coords_to_matrix_length(params3):
    with pytest.raises(ValueError):
        coords_to_matrix(params3, [1, 2, 3])


def test_params_mismatch(params3, params5):
    with pytest.raises(ParamsMismatch):
        intersect(fiber_e1(params3), fiber_e1(params5))


def test_divisor_expression():
    assert divisor_expression((0, -1, 0, 0, 1, 0)) == '−E₂ + Δ_{F(1+α)/2}'
    assert divisor_expression((2, 0, 1, 0, 0, -3)) == '2E₁ + Δ − 3Δ_{(a+F)α/q}'
    assert divisor_expression((0,) * 6) == '0'


@settings(max_examples=1000, derandomize=True, deadline=None)
@given(divisor_coords)
def test_coordinates_round_trip(v):
    assert matrix_to_coords(coords_to_matrix(P5, v)) == tuple(v)


@settings(max_examples=1000, derandomize=True, deadline=None)
@given(order_coords, order_coords)
def test_delta_intersection_is_norm(u, v):
    x, y = OrderElement(P5, *u), OrderElement(P5, *v)
    assert intersect(delta(x), delta(y)) == (x - y).nrd()
    assert self_int(delta(x)) == 0


@settings(max_examples=300, derandomize=True, deadline=None)
@given(divisor_coords, divisor_coords)
def test_intersection_form(u, v):
    L, M = coords_to_matrix(P5, u), coords_to_matrix(P5, v)
    assert intersect(L, fiber_e1(P5)) == L.A
    assert intersect(L, fiber_e2(P5)) == L.D
    assert intersect(L, M) == intersect(M, L)
    assert intersect(L, L) == self_int(L)
    assert self_int(L + M) == self_int(L) + 2 * intersect(L, M) + self_int(M)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(order_coords, order_coords)
def test_pullback_of_diagonal(u, v):
    a1, a2 = OrderElement(P5, *u), OrderElement(P5, *v)
    one = OrderElement.from_int(P5, 1)
    assert pullback(diagonal_matrix(a1, a2), delta(one)) == j_of_delta(a1, a2)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(small_order, small_order, small_order, small_order, small_order, small_order,
       small_order, small_order, divisor_coords)
def test_pullback_composition(g0, g1, g2, g3, h0, h1, h2, h3, v):
    g = ((OrderElement(P5, *g0), OrderElement(P5, *g1)), (OrderElement(P5, *g2), OrderElement(P5, *g3)))
    h = ((OrderElement(P5, *h0), OrderElement(P5, *h1)), (OrderElement(P5, *h2), OrderElement(P5, *h3)))
    L = coords_to_matrix(P5, v)
    assert pullback(matrix_compose(g, h), L) == pullback(h, pullback(g, L))


def test_swap(params3):
    L = coords_to_matrix(params3, [3, -1, 2, 5, 0, 7])
    swapped = pullback(swap_matrix(params3), L)
    assert swapped == DivisorMatrix(L.D, L.A, L.beta.conj())
    assert pullback(swap_matrix(params3), swapped) == L
