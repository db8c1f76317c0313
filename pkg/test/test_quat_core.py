from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import isprime, primerange

from superspecial.quat_core import (AlgebraParams, NotInOrder, OrderElement, ParameterError,
                                    ParamsMismatch, QuatElement, SearchCapExceeded, conj,
                                    find_params, make_params, nrd, order_basis,
                                    order_basis_elements, rational_order_coords, to_order_coords,
                                    trd)

coord = st.integers(min_value=-60, max_value=60)
order_coords = st.tuples(coord, coord, coord, coord)
rational = st.fractions(min_value=-20, max_value=20, max_denominator=12)
quat_coeffs = st.tuples(rational, rational, rational, rational)


@pytest.mark.parametrize('p, q, a', [(3, 19, 4), (5, 3, 1), (7, 11, 2)])
def test_find_params_small_primes(p, q, a):
    assert find_params(p) == AlgebraParams(p, q, a)


@pytest.mark.parametrize('p', [2, 4, 1, 0, -3, 9])
def test_find_params_rejects_non_odd_primes(p):
    with pytest.raises(ParameterError):
        find_params(p)


def test_find_params_cap():
    with pytest.raises(SearchCapExceeded):
        find_params(3, q_cap=11)


def test_found_params_satisfy_all_conditions():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 101, 199):
        params = find_params(p)
        assert params.check() is params
        assert params.q % 8 == 3
        assert (params.a ** 2 + p) % params.q == 0


def test_find_params_independent_check():
    for p in primerange(3, 300):
        params = find_params(p)
        q, a = params.q, params.a
        assert isprime(q) and q % 8 == 3 and q != p
        assert pow(-q % p, (p - 1) // 2, p) == p - 1
        assert (a * a + p) % q == 0
        assert all((x * x + p) % q for x in range(a))
        for r in primerange(3, q):
            admissible = r % 8 == 3 and r != p and pow(-r % p, (p - 1) // 2, p) == p - 1
            assert not admissible, (p, r)


def test_large_q_override():
    params = make_params(3, 1000000123)
    assert params.a == 157032605
    assert (params.a ** 2 + 3) % params.q == 0


def test_make_params_overrides():
    assert make_params(3, 19) == AlgebraParams(3, 19, 4)
    assert make_params(3, 19, 15) == AlgebraParams(3, 19, 15)
    with pytest.raises(ParameterError):
        make_params(3, a=4)
    with pytest.raises(ParameterError):
        make_params(3, 19, 5)
    with pytest.raises(ParameterError):
        make_params(5, 11)
    with pytest.raises(ParameterError):
        make_params(3, 3)


def test_relations(params3):
    one = QuatElement(params3, 1)
    F = QuatElement(params3, 0, 1)
    alpha = QuatElement(params3, 0, 0, 1)
    assert F * F == -3 * one
    assert alpha * alpha == -19 * one
    assert F * alpha == -(alpha * F)
    assert F * alpha == QuatElement(params3, 0, 0, 0, 1)


def test_order_basis_norms_and_traces(params3):
    w = order_basis(params3)
    assert [nrd(x) for x in w] == [1, 5, 15, 1]
    assert [trd(x) for x in w] == [2, 1, 0, 0]


def test_order_basis_is_closed(params):
    basis = order_basis_elements(params)
    for x in basis:
        for y in basis:
            prod = x * y
            assert prod.to_quat() == x.to_quat() * y.to_quat()


def test_literal_subscript_is_not_integral(params3):
    x = QuatElement(params3, 2, 0, 0, 1) / 19
    with pytest.raises(NotInOrder) as err:
        to_order_coords(x)
    assert err.value.coords[1] == Fraction(-8, 19)


def test_params_mismatch(params3, params5):
    with pytest.raises(ParamsMismatch):
        QuatElement(params3, 1) + QuatElement(params5, 1)


def test_str():
    params = AlgebraParams(3, 19, 4)
    assert str(OrderElement(params, 2, 1, 0, -3)) == '2 + (1+α)/2 − 3·(a+F)α/q'
    assert str(OrderElement(params, -1, 0, -1, 1)) == '−1 − F(1+α)/2 + (a+F)α/q'
    assert str(OrderElement(params)) == '0'


@settings(max_examples=1000, derandomize=True, deadline=None)
@given(quat_coeffs, quat_coeffs)
def test_conj_is_anti_automorphism(u, v):
    params = AlgebraParams(3, 19, 4)
    x, y = QuatElement(params, *u), QuatElement(params, *v)
    assert conj(x * y) == conj(y) * conj(x)
    assert conj(conj(x)) == x
    assert nrd(x * y) == nrd(x) * nrd(y)
    assert x + conj(x) == QuatElement(params, trd(x))
    assert x * conj(x) == QuatElement(params, nrd(x))


@settings(max_examples=1000, derandomize=True, deadline=None)
@given(order_coords, order_coords)
def test_order_is_a_ring(u, v):
    params = AlgebraParams(7, 11, 2)
    x, y = OrderElement(params, *u), OrderElement(params, *v)
    assert to_order_coords(x.to_quat()) == x.coords
    assert (x * y).to_quat() == x.to_quat() * y.to_quat()
    assert nrd(x.to_quat()).denominator == 1
    assert x.conj().to_quat() == conj(x.to_quat())
    assert rational_order_coords((x - y).to_quat()) == tuple(a - b for a, b in zip(u, v))
