"""
The Chern class map c1 : NS(A)/p -> H^1(A, Omega^1) for A = E x E.

F_{p^2} is F_p[t]/(t^2 + q). O acts on H^0(E, Omega^1) through the
reduction phi : O -> F_{p^2} sending F to 0 and alpha to t (or to -t for
the conjugate convention), and on H^1(E, O_E) through Frobenius of phi.
In the basis Omega_1..Omega_4 a class j(L) = [[A, conj b], [b, D]] maps to

    (A, phi(b), Frob(phi(b)), D)  mod p.
"""
from __future__ import absolute_import, division

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .common.modular import (canonical_span, legendre_symbol, mod_inv, nullspace_mod_p,
                             rref_mod_p, solve_mod_p, symmetric_lift)
from .ns_lattice import (DIVISOR_NAMES, DivisorMatrix, basis_divisors, coords_to_matrix,
                         divisor_expression)
from .quat_core import (AlgebraParams, NotInOrder, OrderElement, ParameterError, QuatElement,
                        rational_order_coords)

logger = logging.getLogger(__name__)


class InternalInconsistency(RuntimeError):
    pass


@dataclass(frozen=True)
class Fp2Field:
    """F_p[t]/(t^2 - r) with r = -q mod p a non-residue."""
    p: int
    r: int
    alpha_sign: int = 1

    def __call__(self, c0=0, c1=0) -> 'Fp2Element':
        return Fp2Element(self, c0 % self.p, c1 % self.p)

    @property
    def zero(self):
        return self(0, 0)

    @property
    def one(self):
        return self(1, 0)

    @property
    def t(self):
        return self(0, 1)

    def inv_p(self, n: int) -> int:
        return mod_inv(n, self.p)


def make_field(params: AlgebraParams, alpha_sign: int = 1) -> Fp2Field:
    if alpha_sign not in (1, -1):
        raise ValueError('alpha_sign must be +1 or -1')
    r = (-params.q) % params.p
    if legendre_symbol(r, params.p) != -1:
        raise ParameterError('t^2 + {} is reducible over F_{}'.format(params.q, params.p))
    return Fp2Field(params.p, r, alpha_sign)


@dataclass(frozen=True)
class Fp2Element:
    field: Fp2Field
    c0: int
    c1: int

    def _lift(self, other):
        if isinstance(other, Fp2Element):
            if other.field.p != self.field.p or other.field.r != self.field.r:
                raise ValueError('elements of different fields')
            return other
        if isinstance(other, int):
            return self.field(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field(self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self):
        return self.field(-self.c0, -self.c1)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field(self.c0 - other.c0, self.c1 - other.c1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        r = self.field.r
        return self.field(self.c0 * other.c0 + r * self.c1 * other.c1,
                          self.c0 * other.c1 + self.c1 * other.c0)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.c0 * self.c0 - self.field.r * self.c1 * self.c1) % self.field.p

    def inverse(self) -> 'Fp2Element':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('zero has no inverse in F_{}^2'.format(self.field.p))
        k = self.field.inv_p(n)
        return self.field(self.c0 * k, -self.c1 * k)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self) -> 'Fp2Element':
        return self.field(self.c0, -self.c1)

    def is_zero(self):
        return self.c0 == 0 and self.c1 == 0

    def pair(self) -> Tuple[int, int]:
        return (self.c0, self.c1)

    def __str__(self):
        if self.c1 == 0:
            return str(self.c0)
        t = 't' if self.c1 == 1 else '{}t'.format(self.c1)
        return t if self.c0 == 0 else '{}+{}'.format(self.c0, t)


def phi(field: Fp2Field, x: OrderElement) -> Fp2Element:
    """y0 + y1 (1+t)/2 + y3 a t / q, with t replaced by -t if alpha_sign = -1."""
    params = x.params
    y0, y1, _, y3 = x.coords
    half = field.inv_p(2)
    t = field.t * field.alpha_sign
    return (field(y0) + (field.one + t) * (y1 * half)
            + t * (y3 * params.a * field.inv_p(params.q)))


def phi_quat(field: Fp2Field, x: QuatElement) -> Fp2Element:
    """x0 + x2 t for x in O, computed from the rational coordinates."""
    def red(c):
        return c.numerator * field.inv_p(c.denominator)
    return field(red(x.x0)) + field.t * (field.alpha_sign * red(x.x2))


def c1_of_matrix(field: Fp2Field, M: DivisorMatrix) -> Tuple[Fp2Element, ...]:
    b = phi(field, M.beta)
    return (field(M.A), b, b.frobenius(), field(M.D))


def endomorphism_action(field: Fp2Field, a1: OrderElement, a2: OrderElement) -> Tuple[Fp2Element, ...]:
    """Multipliers of (a1 x a2)^* on Omega_1..Omega_4."""
    f1, f2 = phi(field, a1), phi(field, a2)
    return (field(a1.nrd()), f1.frobenius() * f2, f1 * f2.frobenius(), field(a2.nrd()))


def chern_matrix(params: AlgebraParams, field: Optional[Fp2Field] = None) -> List[List[Fp2Element]]:
    """4 x 6; column i is c1 of the i-th basis divisor."""
    field = field or make_field(params)
    columns = [c1_of_matrix(field, M) for M in basis_divisors(params)]
    return [[columns[j][i] for j in range(6)] for i in range(4)]


def displayed_chern_columns(params: AlgebraParams, field: Optional[Fp2Field] = None) -> List[Tuple[Fp2Element, ...]]:
    """u1..u6 as printed: evaluated from their closed forms, not from the lattice."""
    field = field or make_field(params)
    p, q, a = params.p, params.q, params.a
    one, zero = field.one, field.zero
    t = field.t * field.alpha_sign
    half, q_inv = field.inv_p(2), field.inv_p(q)
    u2 = (one, zero, zero, zero)
    return [
        (zero, zero, zero, one),
        u2,
        (one, one, one, one),
        (one, (one + t) * half, (one - t) * half, field((1 + q) * mod_inv(4, p))),
        u2,
        (one, t * (a * q_inv), -t * (a * q_inv), field(a * a * q_inv)),
    ]


def column(matrix: Sequence[Sequence[Fp2Element]], j: int) -> Tuple[Fp2Element, ...]:
    return tuple(row[j] for row in matrix)


def chern_rank_over_fp2(matrix: Sequence[Sequence[Fp2Element]]) -> int:
    rows = [list(row) for row in matrix]
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(n_rows):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def flatten_over_fp(matrix: Sequence[Sequence[Fp2Element]]) -> np.ndarray:
    """Each F_{p^2} row becomes its constant row followed by its t row."""
    flat = []
    for row in matrix:
        flat.append([x.c0 for x in row])
        flat.append([x.c1 for x in row])
    return np.array(flat, dtype=object)


def apply(matrix: Sequence[Sequence[Fp2Element]], v: Sequence[int]) -> Tuple[Fp2Element, ...]:
    return tuple(sum((x * int(c) for x, c in zip(row, v)), row[0].field.zero) for row in matrix)


@dataclass(frozen=True)
class KernelBasis:
    dimension: int
    vectors: Tuple[Tuple[int, ...], ...]
    image_dimension: int


def kernel_basis(params: AlgebraParams, field: Optional[Fp2Field] = None) -> KernelBasis:
    field = field or make_field(params)
    flat = flatten_over_fp(chern_matrix(params, field))
    p = params.p
    vectors = canonical_span(nullspace_mod_p(flat, p), p)
    _, pivots = rref_mod_p(flat, p)
    basis = KernelBasis(len(vectors), tuple(vectors), len(pivots))
    if basis.dimension + basis.image_dimension != 6:
        raise InternalInconsistency('rank-nullity failed at p = {}'.format(p))
    return basis


def ell(params: AlgebraParams) -> int:
    """a / 2q mod p."""
    return params.a * mod_inv(2 * params.q, params.p) % params.p


def second_kernel_vector(params: AlgebraParams, field: Optional[Fp2Field] = None) -> Tuple[int, ...]:
    """
    Solve u6 = c4 u4 + c3 u3 + c2 u2 + c1 u1 over F_p and return
    (-c1, -c2, -c3, -c4, 0, 1).
    """
    field = field or make_field(params)
    p = params.p
    flat = flatten_over_fp(chern_matrix(params, field))
    coeffs = solve_mod_p(flat[:, :4], list(flat[:, 5]), p)
    if coeffs is None:
        raise InternalInconsistency('u6 is not a unique F_p-combination of u1..u4 at p = {}'.format(p))
    return tuple((-c) % p for c in coeffs) + (0, 1)


@dataclass(frozen=True)
class CandidateAudit:
    label: str
    formula: str
    vector: Tuple[int, ...]
    member: bool
    residual: Tuple[Tuple[int, int], ...]
    derived: bool


@dataclass(frozen=True)
class AuditReport:
    ell: int
    literal_subscript_in_order: bool
    literal_subscript_coords: Tuple[str, ...]
    candidates: Tuple[CandidateAudit, ...]

    def candidate(self, label: str) -> CandidateAudit:
        return next(c for c in self.candidates if c.label == label)


def _audit(matrix, label, formula, vector, p, derived=False) -> CandidateAudit:
    vector = tuple(int(c) % p for c in vector)
    residual = apply(matrix, vector)
    member = all(x.is_zero() for x in residual)
    if not member:
        logger.warning('p=%d: candidate %s is not in the kernel, residual (%s)', p, label,
                       ', '.join(str(x) for x in residual))
    return CandidateAudit(label, formula, vector, member,
                          tuple(x.pair() for x in residual), derived)


def audit_paper_basis(params: AlgebraParams, field: Optional[Fp2Field] = None) -> AuditReport:
    """
    Check the printed kernel basis against the computed Chern matrix.

    (i)   Delta_{F(1+alpha)/2} - E2
    (ii)  Delta_{(a+F)alpha/q} - l Delta_{(1+alpha)/2} + 2l Delta - (l+1) E2 - (1-q+2a) l E1
    (iii) u6 - (2a/q) u4 + (a/q) u3 - (a/2q + 1) u2 - (a/2q - a/2 + a^2/q) u1
    corrected: second_kernel_vector
    """
    field = field or make_field(params)
    p, q, a = params.p, params.q, params.a
    matrix = chern_matrix(params, field)
    l = ell(params)
    inv = field.inv_p

    literal = (QuatElement(params, 2, 0, 0, 1) / q)
    coords = rational_order_coords(literal)
    in_order = all(c.denominator == 1 for c in coords)
    if not in_order:
        logger.info('p=%d: (2+Fα)/q is not an order element: %s', p,
                    NotInOrder(coords))

    a_q = a * inv(q)
    a_2q = a * inv(2 * q)
    c2 = a_2q + 1
    c1 = a_2q - a * inv(2) + a * a * inv(q)
    candidates = (
        _audit(matrix, 'i', 'Δ_{F(1+α)/2} − E₂', (0, -1, 0, 0, 1, 0), p),
        _audit(matrix, 'ii',
               'Δ_{(a+F)α/q} − ℓΔ_{(1+α)/2} + 2ℓΔ − (ℓ+1)E₂ − (1−q+2a)ℓE₁',
               (-(1 - q + 2 * a) * l, -(l + 1), 2 * l, -l, 0, 1), p),
        _audit(matrix, 'iii',
               'u₆ − (2a/q)u₄ + (a/q)u₃ − (a/2q+1)u₂ − (a/2q − a/2 + a²/q)u₁',
               (-c1, -c2, a_q, -2 * a_q, 0, 1), p),
        _audit(matrix, 'corrected', 'u₆ − Σ cᵢuᵢ, coefficients solved over F_p',
               second_kernel_vector(params, field), p, derived=True),
    )
    return AuditReport(l, in_order, tuple(str(c) for c in coords), candidates)


def kernel_expressions(params: AlgebraParams, vectors: Sequence[Sequence[int]]) -> List[str]:
    return [divisor_expression([symmetric_lift(c, params.p) for c in v]) for v in vectors]


def vanishes_through_lattice(params: AlgebraParams, v: Sequence[int], field: Optional[Fp2Field] = None) -> bool:
    """c1(coords_to_matrix(v)) == 0, computed from the divisor matrix itself."""
    field = field or make_field(params)
    return all(x.is_zero() for x in c1_of_matrix(field, coords_to_matrix(params, list(v))))


@dataclass(frozen=True)
class KummerReport:
    p: int
    abelian_rank: int
    exceptional_curves: int
    blowup_rank: int
    kernel_dimension: int
    artin_invariant: int
    discriminant: int
    mod_p_isomorphic: bool


def kummer_report(params: AlgebraParams, kernel: Optional[KernelBasis] = None) -> KummerReport:
    """
    Bookkeeping for Km(A): 2 NS(A~) is inside pi^* NS(Km A) and p is odd, so
    NS(Km A)/p = NS(A~)/p, and the involution acts trivially on
    H^1(A, Omega^1), so H^1(Km A, Omega^1) = H^1(A~, Omega^1) and the kernel
    dimension carries over from A.
    """
    kernel = kernel or kernel_basis(params)
    sigma0 = 1
    return KummerReport(
        p=params.p,
        abelian_rank=len(DIVISOR_NAMES),
        exceptional_curves=16,
        blowup_rank=len(DIVISOR_NAMES) + 16,
        kernel_dimension=kernel.dimension,
        artin_invariant=sigma0,
        discriminant=-params.p ** (2 * sigma0),
        mod_p_isomorphic=params.p != 2,
    )
