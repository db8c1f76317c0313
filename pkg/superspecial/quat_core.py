"""
Exact arithmetic in the definite quaternion algebra B ramified at p and
infinity, written as

    B = Q + QF + Qalpha + QFalpha,   F^2 = -p, alpha^2 = -q, F alpha = -alpha F,

together with the maximal order

    O = Z + Z(1+alpha)/2 + Z F(1+alpha)/2 + Z (a+F)alpha/q

and the search for the auxiliary parameters (q, a).
"""
from __future__ import absolute_import, division

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from sympy import isprime, nextprime

from .common.modular import legendre_symbol, sqrt_mod

logger = logging.getLogger(__name__)

DEFAULT_Q_CAP = 10 ** 5

ORDER_BASIS_NAMES = ('1', '(1+α)/2', 'F(1+α)/2', '(a+F)α/q')


class ParameterError(ValueError):
    pass


class SearchCapExceeded(ParameterError):
    pass


class ParamsMismatch(ValueError):
    pass


class NotInOrder(ValueError):
    """Raised when a quaternion has non-integral order coordinates."""

    def __init__(self, coords):
        self.coords = tuple(coords)
        super(NotInOrder, self).__init__(
            'not an element of the maximal order; order coordinates {}'.format(
                ', '.join(str(c) for c in self.coords)))


@dataclass(frozen=True)
class AlgebraParams:
    p: int
    q: int
    a: int

    def check(self):
        """Raise ParameterError unless every defining condition holds."""
        p, q, a = self.p, self.q, self.a
        if p < 3 or not isprime(p):
            raise ParameterError('p must be a prime >= 3, got {}'.format(p))
        if not isprime(q):
            raise ParameterError('q must be prime, got {}'.format(q))
        if q == p:
            raise ParameterError('q must differ from p')
        if q % 8 != 3:
            raise ParameterError('q must be 3 mod 8, got q = {}'.format(q))
        if legendre_symbol(-q, p) != -1:
            raise ParameterError('-q = {} must be a non-residue mod p = {}'.format(-q, p))
        if not 0 <= a < q:
            raise ParameterError('a must lie in [0, q), got {}'.format(a))
        if (a * a + p) % q != 0:
            raise ParameterError('a^2 must be -p mod q, got a = {}'.format(a))
        return self


def _check_p(p):
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise ParameterError('p must be a prime >= 3, got {!r}'.format(p))


def find_params(p: int, q_cap: int = DEFAULT_Q_CAP) -> AlgebraParams:
    """
    Smallest prime q = 3 mod 8 with (-q|p) = -1 (and a square root a of -p
    mod q), and the smallest such a >= 0.
    """
    _check_p(p)
    q = 3
    while q <= q_cap:
        if q % 8 == 3 and q != p and legendre_symbol(-q, p) == -1:
            a = sqrt_mod(-p, q)
            if a is not None:
                logger.debug('p=%d: q=%d a=%d', p, q, a)
                return AlgebraParams(p, q, a)
        q = nextprime(q)
    raise SearchCapExceeded('no admissible q <= {} for p = {}'.format(q_cap, p))


def make_params(p: int, q: Optional[int] = None, a: Optional[int] = None,
                q_cap: int = DEFAULT_Q_CAP) -> AlgebraParams:
    """Parameters for p with optional overrides of q and a, validated."""
    _check_p(p)
    if q is None:
        if a is not None:
            raise ParameterError('--a requires --q')
        return find_params(p, q_cap)
    if a is None:
        if q < 2:
            raise ParameterError('q must be prime, got {}'.format(q))
        a = sqrt_mod(-p, q)
        if a is None:
            raise ParameterError('-p has no square root mod q = {}'.format(q))
    return AlgebraParams(p, q, a).check()


@dataclass(frozen=True)
class QuatElement:
    """x0 + x1 F + x2 alpha + x3 F alpha with rational coefficients."""
    params: AlgebraParams
    x0: Fraction = Fraction(0)
    x1: Fraction = Fraction(0)
    x2: Fraction = Fraction(0)
    x3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('x0', 'x1', 'x2', 'x3'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def coeffs(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x0, self.x1, self.x2, self.x3)

    def _same(self, other):
        if self.params != other.params:
            raise ParamsMismatch('{} vs {}'.format(self.params, other.params))

    def _coerce(self, other):
        if isinstance(other, QuatElement):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return QuatElement(self.params, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuatElement(self.params, *[u + v for u, v in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return QuatElement(self.params, *[-u for u in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quat_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quat_mul(other, self)

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return QuatElement(self.params, *[u / other for u in self.coeffs])

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational_integer(self):
        return (self.x1 == self.x2 == self.x3 == 0) and self.x0.denominator == 1

    def __str__(self):
        names = ('', 'F', 'α', 'Fα')
        terms = ['{}{}'.format(c, n) if n else str(c)
                 for c, n in zip(self.coeffs, names) if c != 0]
        return ' + '.join(terms) if terms else '0'


def quat_mul(x: QuatElement, y: QuatElement) -> QuatElement:
    """Product in B from the relations F^2 = -p, alpha^2 = -q, F alpha = -alpha F."""
    x._same(y)
    p, q = x.params.p, x.params.q
    a0, a1, a2, a3 = x.coeffs
    b0, b1, b2, b3 = y.coeffs
    return QuatElement(
        x.params,
        a0 * b0 - p * a1 * b1 - q * a2 * b2 - p * q * a3 * b3,
        a0 * b1 + a1 * b0 + q * (a2 * b3 - a3 * b2),
        a0 * b2 + a2 * b0 - p * (a1 * b3 - a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def conj(x: QuatElement) -> QuatElement:
    return QuatElement(x.params, x.x0, -x.x1, -x.x2, -x.x3)


def nrd(x: QuatElement) -> Fraction:
    p, q = x.params.p, x.params.q
    return x.x0 ** 2 + p * x.x1 ** 2 + q * x.x2 ** 2 + p * q * x.x3 ** 2


def trd(x: QuatElement) -> Fraction:
    return 2 * x.x0


def order_basis(params: AlgebraParams) -> Tuple[QuatElement, ...]:
    """w0 = 1, w1 = (1+alpha)/2, w2 = F(1+alpha)/2, w3 = (a+F)alpha/q."""
    half = Fraction(1, 2)
    q, a = params.q, params.a
    return (
        QuatElement(params, 1, 0, 0, 0),
        QuatElement(params, half, 0, half, 0),
        QuatElement(params, 0, half, 0, half),
        QuatElement(params, 0, 0, Fraction(a, q), Fraction(1, q)),
    )


def rational_order_coords(x: QuatElement) -> Tuple[Fraction, ...]:
    """Coordinates of x in the order basis, possibly non-integral."""
    q, a = x.params.q, x.params.a
    x0, x1, x2, x3 = x.coeffs
    y2 = 2 * x1
    y3 = q * (x3 - x1)
    y1 = 2 * (x2 - a * (x3 - x1))
    y0 = x0 - y1 / 2
    return (y0, y1, y2, y3)


def to_order_coords(x: QuatElement) -> Tuple[int, int, int, int]:
    coords = rational_order_coords(x)
    if any(c.denominator != 1 for c in coords):
        raise NotInOrder(coords)
    return tuple(int(c) for c in coords)


@dataclass(frozen=True)
class OrderElement:
    """y0 w0 + y1 w1 + y2 w2 + y3 w3 with integer coordinates."""
    params: AlgebraParams
    y0: int = 0
    y1: int = 0
    y2: int = 0
    y3: int = 0

    @property
    def coords(self) -> Tuple[int, int, int, int]:
        return (self.y0, self.y1, self.y2, self.y3)

    @classmethod
    def from_quat(cls, x: QuatElement) -> 'OrderElement':
        return cls(x.params, *to_order_coords(x))

    @classmethod
    def from_int(cls, params: AlgebraParams, n: int) -> 'OrderElement':
        return cls(params, n, 0, 0, 0)

    def to_quat(self) -> QuatElement:
        total = QuatElement(self.params)
        for y, w in zip(self.coords, order_basis(self.params)):
            if y:
                total = total + w * y
        return total

    def __add__(self, other):
        if not isinstance(other, OrderElement):
            return NotImplemented
        if self.params != other.params:
            raise ParamsMismatch('{} vs {}'.format(self.params, other.params))
        return OrderElement(self.params, *[u + v for u, v in zip(self.coords, other.coords)])

    def __neg__(self):
        return OrderElement(self.params, *[-u for u in self.coords])

    def __sub__(self, other):
        if not isinstance(other, OrderElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElement(self.params, *[u * other for u in self.coords])
        if not isinstance(other, OrderElement):
            return NotImplemented
        return OrderElement.from_quat(self.to_quat() * other.to_quat())

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def conj(self) -> 'OrderElement':
        return OrderElement.from_quat(conj(self.to_quat()))

    def nrd(self) -> int:
        return int(nrd(self.to_quat()))

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        out = ''
        for y, name in zip(self.coords, ORDER_BASIS_NAMES):
            if y == 0:
                continue
            if name == '1':
                term = str(abs(y))
            else:
                term = name if abs(y) == 1 else '{}·{}'.format(abs(y), name)
            if not out:
                out = ('−' if y < 0 else '') + term
            else:
                out += (' − ' if y < 0 else ' + ') + term
        return out or '0'


def order_basis_elements(params: AlgebraParams) -> Tuple[OrderElement, ...]:
    return tuple(OrderElement(params, *[int(i == j) for j in range(4)]) for i in range(4))


def random_order_element(params: AlgebraParams, rng: random.Random, bound: int = 50) -> OrderElement:
    return OrderElement(params, *[rng.randint(-bound, bound) for _ in range(4)])


def random_quat_element(params: AlgebraParams, rng: random.Random, bound: int = 50) -> QuatElement:
    def rational():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return QuatElement(params, *[rational() for _ in range(4)])
