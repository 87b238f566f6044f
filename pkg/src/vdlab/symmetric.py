"""Complete homogeneous symmetric polynomials, Vandermonde determinants and Schur polynomials.

Row conventions (frozen):

* ``vandermonde_det(k)`` is det(x_c^r) with rows r = 0..k-1 top to bottom, so
  it equals prod_{a<b} (x_b - x_a).
* the bialternant numerator is det(x_c^{j_r}) with rows in increasing order of
  ``j``; divided by the Vandermonde above it is the positive Schur polynomial.
* the Jacobi-Trudi matrix has row r = (h_{j_r-(k-1)}, ..., h_{j_r}), rows in
  increasing order of ``j``; its determinant is (-1)^{k(k-1)/2} times the
  positive Schur polynomial.

Both constructors return ``(positive_form, sign)`` with ``raw == sign * positive_form``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .linalg import det_bareiss, det_cofactor, leibniz_alternant
from .polyring import InexactDivision, Polynomial, poly_divide_exact


def check_exponent_set(J) -> tuple:
    J = tuple(int(j) for j in J)
    if not J:
        raise ValueError("exponent set must be non-empty")
    if J[0] < 0 or any(a >= b for a, b in zip(J, J[1:])):
        raise ValueError(f"exponents must be strictly increasing and non-negative: {J}")
    return J


@lru_cache(maxsize=None)
def complete_h(d: int, k: int) -> Polynomial:
    """h_d(x_1..x_k): sum of all degree-``d`` monomials; 0 for d < 0, 1 for d = 0."""
    if k < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        return Polynomial.zero(k)
    terms = {}
    for combo in combinations_with_replacement(range(k), d):
        m = [0] * k
        for i in combo:
            m[i] += 1
        terms[tuple(m)] = 1
    return Polynomial(k, terms)


@lru_cache(maxsize=None)
def vandermonde_det(k: int) -> Polynomial:
    """det of the matrix with rows x^0, ..., x^{k-1}: prod_{a<b} (x_b - x_a)."""
    p = Polynomial.one(k)
    for a in range(k):
        for b in range(a + 1, k):
            p = p * (Polynomial.var(k, b) - Polynomial.var(k, a))
    return p


def _canonical(raw: Polynomial, what: str) -> tuple:
    if not raw:
        raise ArithmeticError(f"{what} vanished identically")
    sign = raw.content_sign()
    pos = raw if sign > 0 else -raw
    if not pos.is_nonnegative():
        raise ArithmeticError(f"{what} has mixed-sign coefficients")
    return pos, sign


@lru_cache(maxsize=None)
def schur_bialternant(J) -> tuple:
    """Schur polynomial of exponent set ``J`` as det(x_c^{j_r}) / vandermonde_det."""
    J = check_exponent_set(J)
    k = len(J)
    num = leibniz_alternant(k, J)
    try:
        q = poly_divide_exact(num, vandermonde_det(k))
    except InexactDivision as exc:
        raise InexactDivision(f"bialternant of {J} not divisible by the Vandermonde") from exc
    return _canonical(q, f"bialternant {J}")


def jacobi_trudi_matrix(J, h) -> list:
    """Rows (h(j_r-(k-1)), ..., h(j_r)) with ``h`` any callable degree -> ring element."""
    k = len(J)
    return [[h(j - (k - 1) + c) for c in range(k)] for j in J]


@lru_cache(maxsize=None)
def schur_jacobi_trudi(J, method: str = "bareiss") -> tuple:
    J = check_exponent_set(J)
    k = len(J)
    M = jacobi_trudi_matrix(J, lambda d: complete_h(d, k))
    one = Polynomial.one(k)
    if method == "bareiss":
        raw = det_bareiss(M, one)
    elif method == "cofactor":
        raw = det_cofactor(M, one)
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return _canonical(raw, f"Jacobi-Trudi determinant {J}")


def schur(J) -> Polynomial:
    """Positive Schur polynomial of the exponent set ``J`` in len(J) variables."""
    return schur_bialternant(check_exponent_set(J))[0]


def reduced_exponents(J) -> tuple:
    J = check_exponent_set(J)
    return tuple(j - J[0] for j in J)


def reduced_schur(J) -> Polynomial:
    """Schur polynomial of (0, j2-j1, ..., jk-j1)."""
    return schur(reduced_exponents(J))


def partition_to_exponents(parts, k: int) -> tuple:
    """Exponent set lambda + staircase for a partition with at most ``k`` parts."""
    parts = [p for p in parts if p]
    if len(parts) > k:
        raise ValueError(f"partition {parts} has more than {k} parts")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    lam = list(parts) + [0] * (k - len(parts))
    return tuple(lam[k - 1 - r] + r for r in range(k))


def exponents_to_partition(J) -> tuple:
    J = check_exponent_set(J)
    k = len(J)
    return tuple(J[k - 1 - i] - (k - 1 - i) for i in range(k))


def schur_partition(parts, k: int) -> Polynomial:
    """s_lambda(x_1..x_k); zero when lambda has more than k nonzero parts."""
    if len([p for p in parts if p]) > k:
        return Polynomial.zero(k)
    return schur(partition_to_exponents(parts, k))


def schur_degree(J) -> int:
    J = check_exponent_set(J)
    k = len(J)
    return sum(J) - k * (k - 1) // 2
