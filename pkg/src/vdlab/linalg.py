"""Exact determinants and rank/kernel computations.

Polynomial matrices use fraction-free (Bareiss) elimination, with a memoised
cofactor expansion as an independent second route. Rational matrices use
plain Gauss-Jordan elimination over ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polyring import Polynomial, poly_divide_exact


def _is_zero(x) -> bool:
    return not x


def _exact_div(a, b):
    if isinstance(a, Polynomial):
        return poly_divide_exact(a, b)
    q = Fraction(a) / Fraction(b)
    return q


def det_bareiss(matrix, one=1):
    """Determinant of a square matrix with entries in an integral domain.

    ``one`` is the multiplicative identity of the entry ring; entries only need
    ``+ - *``, truthiness and exact division (polynomials or rationals).
    """
    n = len(matrix)
    if n == 0:
        return one
    M = [list(row) for row in matrix]
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(M[k][k]):
            # prefer a pivot with few terms: cheaper subsequent products
            cands = [r for r in range(k + 1, n) if not _is_zero(M[r][k])]
            if not cands:
                return one * 0
            r = min(cands, key=lambda i: len(M[i][k]) if isinstance(M[i][k], Polynomial) else 0)
            M[k], M[r] = M[r], M[k]
            sign = -sign
        piv = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                num = piv * M[i][j] - mik * M[k][j]
                M[i][j] = _exact_div(num, prev) if not _is_zero(num) else num
            M[i][k] = M[i][k] * 0
        prev = piv
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def det_cofactor(matrix, one=1):
    """Determinant by Laplace expansion along rows, memoised on column subsets."""
    n = len(matrix)
    if n == 0:
        return one
    M = [list(row) for row in matrix]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset):
        if row == n:
            return one
        total = None
        for pos, c in enumerate(sorted(cols)):
            a = M[row][c]
            if _is_zero(a):
                continue
            sub = minor(row + 1, cols - {c})
            if _is_zero(sub):
                continue
            term = a * sub
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        return total if total is not None else one * 0

    return minor(0, frozenset(range(n)))


def leibniz_alternant(nvars: int, exponents) -> Polynomial:
    """det(x_c^{e_r}) for rows r (exponents) and columns c (variables), by Leibniz."""
    from itertools import permutations

    k = len(exponents)
    if k != nvars:
        raise ValueError("alternant needs as many exponents as variables")
    terms = {}
    for perm in permutations(range(k)):
        # sign of perm by counting inversions
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        m = [0] * k
        for r, c in enumerate(perm):
            m[c] += exponents[r]
        m = tuple(m)
        terms[m] = terms.get(m, 0) + (-1 if inv % 2 else 1)
    return Polynomial(nvars, terms)


# -- rational matrices -------------------------------------------------------------

def rref(matrix):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    A = [[Fraction(x) for x in row] for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel(matrix) -> list:
    """Basis of the right kernel {v : A v = 0} over Q."""
    if not matrix:
        return []
    A, pivots = rref(matrix)
    cols = len(matrix[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][f]
        basis.append(v)
    return basis


def det_rational(matrix) -> Fraction:
    return Fraction(det_bareiss([[Fraction(x) for x in row] for row in matrix], one=Fraction(1)))
