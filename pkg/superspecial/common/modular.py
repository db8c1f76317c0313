from __future__ import absolute_import, division

from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy.ntheory import sqrt_mod as _sympy_sqrt_mod


def mod_inv(a: int, m: int) -> int:
    """ Return the inverse of 'a' (mod m). Raises ZeroDivisionError if none exists. """
    try:
        return pow(a % m, -1, m)
    except ValueError:
        raise ZeroDivisionError("{} has no inverse (mod {})".format(a, m))


def legendre_symbol(a: int, p: int) -> int:
    """ Compute the Legendre symbol a|p using Euler's criterion.

        p is an odd prime. Returns 0 if p divides a, 1 if a is a square
        mod p, -1 otherwise.
    """
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def sqrt_mod(a: int, m: int) -> Optional[int]:
    """Smallest non-negative x with x*x == a (mod m) for a prime m, or None."""
    root = _sympy_sqrt_mod(a % m, m)
    if root is None:
        return None
    return min(root, -root % m)


def rref_mod_p(mat, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row-echelon form over F_p.

    Arguments:
    mat -- 2D array-like of integers
    p -- prime modulus

    Returns the reduced matrix (entries in 0..p-1, zero rows at the bottom)
    and the list of pivot columns in increasing order.
    """
    red = np.array(mat, dtype=object) % p
    n_rows, n_cols = red.shape
    pivots = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        nonzero = [r for r in range(row, n_rows) if red[r, col] != 0]
        if not nonzero:
            continue
        pivot_row = nonzero[0]
        if pivot_row != row:
            red[[row, pivot_row]] = red[[pivot_row, row]]
        pivot_inv = mod_inv(red[row, col], p)
        red[row] = (red[row] * pivot_inv) % p
        for r in range(n_rows):
            if r != row and red[r, col] != 0:
                red[r] = (red[r] - red[r, col] * red[row]) % p
        pivots.append(col)
        row += 1
    return red, pivots


def nullspace_mod_p(mat, p: int) -> List[Tuple[int, ...]]:
    """Basis of {v : mat v = 0} over F_p, one vector per free column."""
    red, pivots = rref_mod_p(mat, p)
    n_cols = red.shape[1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n_cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-red[i, f]) % p
        basis.append(tuple(int(x) for x in v))
    return basis


def canonical_span(vectors: Sequence[Sequence[int]], p: int) -> List[Tuple[int, ...]]:
    """
    Canonical basis of the F_p-span of `vectors`: the nonzero rows of its
    reduced row-echelon form, pivots in increasing column order.
    """
    vectors = list(vectors)
    if not vectors:
        return []
    red, pivots = rref_mod_p(vectors, p)
    return [tuple(int(x) for x in red[i]) for i in range(len(pivots))]


def solve_mod_p(mat, rhs: Sequence[int], p: int) -> Optional[Tuple[int, ...]]:
    """
    Unique solution x of mat x = rhs over F_p.

    Returns None when the system is inconsistent or the solution is not
    unique.
    """
    mat = np.array(mat, dtype=object)
    n_cols = mat.shape[1]
    aug = np.concatenate([mat, np.array(rhs, dtype=object).reshape(-1, 1)], axis=1)
    red, pivots = rref_mod_p(aug, p)
    if n_cols in pivots or pivots != list(range(n_cols)):
        return None
    return tuple(int(red[i, n_cols]) for i in range(n_cols))


def symmetric_lift(x: int, p: int) -> int:
    """Representative of x mod p in (-p/2, p/2]."""
    x %= p
    return x - p if x > p // 2 else x
