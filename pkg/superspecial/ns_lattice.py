"""
The Neron-Severi group of A = E x E as the module of Hermitian 2x2
matrices over the maximal order O.

A class L is stored as j(L) = [[A, conj(beta)], [beta, D]] with A, D
integers and beta in O. The orientation is the one in which

    j(Delta_x) = [[1, conj(x)], [x, nrd(x)]],

i.e. j(Delta_{a1,a2}) has beta = conj(a1) a2. The pullback formula
t(conj g) M g holds for the transposed matrix [[A, beta], [conj(beta), D]],
which is what `pullback` works with internally.
"""
from __future__ import absolute_import, division

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
import sympy

from .quat_core import (AlgebraParams, OrderElement, ParamsMismatch, QuatElement,
                        conj, order_basis_elements, trd)

logger = logging.getLogger(__name__)

DIVISOR_NAMES = ('E₁', 'E₂', 'Δ', 'Δ_{(1+α)/2}', 'Δ_{F(1+α)/2}', 'Δ_{(a+F)α/q}')

DivisorCoords = Tuple[int, int, int, int, int, int]


class MalformedDivisor(ValueError):
    pass


@dataclass(frozen=True)
class DivisorMatrix:
    A: int
    D: int
    beta: OrderElement

    @property
    def params(self) -> AlgebraParams:
        return self.beta.params

    def __add__(self, other):
        if not isinstance(other, DivisorMatrix):
            return NotImplemented
        return DivisorMatrix(self.A + other.A, self.D + other.D, self.beta + other.beta)

    def __neg__(self):
        return DivisorMatrix(-self.A, -self.D, -self.beta)

    def __sub__(self, other):
        if not isinstance(other, DivisorMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return DivisorMatrix(self.A * n, self.D * n, self.beta * n)

    __rmul__ = __mul__

    def __str__(self):
        return '[[{}, conj({})], [{}, {}]]'.format(self.A, self.beta, self.beta, self.D)


def zero_divisor(params: AlgebraParams) -> DivisorMatrix:
    return DivisorMatrix(0, 0, OrderElement(params))


def fiber_e1(params: AlgebraParams) -> DivisorMatrix:
    return DivisorMatrix(0, 1, OrderElement(params))


def fiber_e2(params: AlgebraParams) -> DivisorMatrix:
    return DivisorMatrix(1, 0, OrderElement(params))


def j_of_delta(a1: OrderElement, a2: OrderElement) -> DivisorMatrix:
    """j((a1 x a2)^* Delta): diagonal nrd(a1), nrd(a2); beta = conj(a1) a2."""
    return DivisorMatrix(a1.nrd(), a2.nrd(), a1.conj() * a2)


def delta(x: OrderElement) -> DivisorMatrix:
    return j_of_delta(OrderElement.from_int(x.params, 1), x)


def basis_divisors(params: AlgebraParams) -> Tuple[DivisorMatrix, ...]:
    """E1, E2, Delta, Delta_{w1}, Delta_{w2}, Delta_{w3}."""
    return (fiber_e1(params), fiber_e2(params)) + tuple(
        delta(w) for w in order_basis_elements(params))


def coords_to_matrix(params: AlgebraParams, v: Sequence[int]) -> DivisorMatrix:
    if len(v) != 6:
        raise ValueError('expected 6 coordinates, got {}'.format(len(v)))
    total = zero_divisor(params)
    for c, b in zip(v, basis_divisors(params)):
        if c:
            total = total + b * int(c)
    return total


def matrix_to_coords(M: DivisorMatrix) -> DivisorCoords:
    """
    Inverse of coords_to_matrix. The transition matrix is unitriangular:
    the Delta coefficients are the order coordinates of beta, then the
    E2 and E1 coefficients absorb A and D.
    """
    if not isinstance(M.beta, OrderElement):
        raise MalformedDivisor('beta must be an order element')
    y = M.beta.coords
    norms = [w.nrd() for w in order_basis_elements(M.params)]
    c2 = M.A - sum(y)
    c1 = M.D - sum(yi * ni for yi, ni in zip(y, norms))
    return (c1, c2) + tuple(y)


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise MalformedDivisor('{} is not an integer: {}'.format(what, x))
    return int(x)


def intersect(L1: DivisorMatrix, L2: DivisorMatrix) -> int:
    """A2 D1 + A1 D2 - trd(beta1 conj(beta2))."""
    if L1.params != L2.params:
        raise ParamsMismatch('{} vs {}'.format(L1.params, L2.params))
    cross = trd(L1.beta.to_quat() * conj(L2.beta.to_quat()))
    return L2.A * L1.D + L1.A * L2.D - _as_integer(cross, 'intersection number')


def self_int(L: DivisorMatrix) -> int:
    """L^2 = 2 det j(L)."""
    return 2 * (L.A * L.D - L.beta.nrd())


def _matmul(X, Y):
    return tuple(
        tuple(X[i][0] * Y[0][j] + X[i][1] * Y[1][j] for j in range(2))
        for i in range(2))


def _conj_transpose(g):
    return tuple(tuple(conj(g[j][i]) for j in range(2)) for i in range(2))


def _quat_matrix(g) -> Tuple[Tuple[QuatElement, ...], ...]:
    return tuple(tuple(x.to_quat() if isinstance(x, OrderElement) else x for x in row)
                 for row in g)


def matrix_compose(g, h):
    """g h for 2x2 matrices over O."""
    prod = _matmul(_quat_matrix(g), _quat_matrix(h))
    return tuple(tuple(OrderElement.from_quat(x) for x in row) for row in prod)


def pullback(g, L: DivisorMatrix) -> DivisorMatrix:
    """
    j(g^* L) for g a 2x2 matrix over O: t(conj g) . T . g with
    T = [[A, beta], [conj(beta), D]], read back into the stored orientation.
    """
    gq = _quat_matrix(g)
    if any(x.params != L.params for row in gq for x in row):
        raise ParamsMismatch('endomorphism and divisor use different parameters')
    b = L.beta.to_quat()
    T = ((QuatElement(L.params, L.A), b), (conj(b), QuatElement(L.params, L.D)))
    R = _matmul(_matmul(_conj_transpose(gq), T), gq)
    for i in range(2):
        if not R[i][i].is_rational_integer():
            raise MalformedDivisor('non-integral diagonal entry {}'.format(R[i][i]))
    if R[1][0] != conj(R[0][1]):
        raise MalformedDivisor('pullback is not Hermitian')
    return DivisorMatrix(int(R[0][0].x0), int(R[1][1].x0), OrderElement.from_quat(R[0][1]))


def swap_matrix(params: AlgebraParams):
    zero, one = OrderElement(params), OrderElement.from_int(params, 1)
    return ((zero, one), (one, zero))


def diagonal_matrix(a1: OrderElement, a2: OrderElement):
    zero = OrderElement(a1.params)
    return ((a1, zero), (zero, a2))


def signature(gram) -> Tuple[int, int]:
    """
    (positive, negative) inertia of a symmetric rational matrix by
    congruence diagonalization. A zero pivot is replaced by a later nonzero
    diagonal entry (symmetric swap) or, failing that, by adding a row and
    column with a nonzero off-diagonal entry.
    """
    n = len(gram)
    m = [[Fraction(int(x)) for x in row] for row in gram]
    pos = neg = 0
    for i in range(n):
        if m[i][i] == 0:
            k = next((k for k in range(i + 1, n) if m[k][k] != 0), None)
            if k is not None:
                m[i], m[k] = m[k], m[i]
                for row in m:
                    row[i], row[k] = row[k], row[i]
            else:
                k = next((k for k in range(i + 1, n) if m[i][k] != 0), None)
                if k is None:
                    continue
                for c in range(n):
                    m[i][c] += m[k][c]
                for r in range(n):
                    m[r][i] += m[r][k]
        pivot = m[i][i]
        for r in range(i + 1, n):
            if m[r][i] == 0:
                continue
            f = m[r][i] / pivot
            for c in range(n):
                m[r][c] -= f * m[i][c]
            for c in range(n):
                m[c][r] -= f * m[c][i]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


class GramReport(NamedTuple):
    matrix: np.ndarray
    rank: int
    signature: Tuple[int, int]
    determinant: int


def gram_matrix(params: AlgebraParams) -> GramReport:
    basis = basis_divisors(params)
    gram = np.array([[intersect(x, y) for y in basis] for x in basis], dtype=object)
    sym = sympy.Matrix(gram.tolist())
    report = GramReport(gram, int(sym.rank()), signature(gram.tolist()), int(sym.det()))
    logger.debug('p=%d gram rank %d signature %s det %d', params.p, report.rank,
                 report.signature, report.determinant)
    return report


def divisor_expression(v: Sequence[int]) -> str:
    """Integer combination of the basis divisors, e.g. 'Δ_{F(1+α)/2} − E₂'."""
    out = ''
    for c, name in zip(v, DIVISOR_NAMES):
        if c == 0:
            continue
        mag = '' if abs(c) == 1 else str(abs(c))
        if not out:
            out = ('−' if c < 0 else '') + mag + name
        else:
            out += (' − ' if c < 0 else ' + ') + mag + name
    return out or '0'


def random_divisor(params: AlgebraParams, rng, bound: int = 20) -> DivisorMatrix:
    return coords_to_matrix(params, [rng.randint(-bound, bound) for _ in range(6)])


def lattice_rows(gram: np.ndarray) -> List[Tuple[int, ...]]:
    return [tuple(int(x) for x in row) for row in gram]
