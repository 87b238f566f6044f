"""Closed-form Hilbert series and degree formulas for Vandermonde quotients.

Everything here is pure arithmetic on the index tuple; the Groebner oracle in
:mod:`vdlab.groebner` is what these are compared against. Formulas that rest
on conjectures return results tagged ``conjectural``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

from .groebner import HilbertSeries
from .ideals import IndexTuple
from .polyring import TaylorSeries, UniPoly

EN_CONVENTIONS = ("zero-anchored", "as-stated")


@dataclass(frozen=True)
class ENTerm:
    """One basis element of an Eagon-Northcott module: subsequence, marker monomial, sign."""

    subsequence: tuple
    markers: tuple
    step: int
    exponent: int
    sign: int


@dataclass(frozen=True)
class Conjectural:
    """A value computed from a conjectured formula; never oracle truth."""

    value: object
    variant: str
    conjectural: bool = True


def _check_en(t: IndexTuple):
    if t.I[0] != 0:
        raise ValueError("EN numerator needs i_0 = 0")
    if not t.k <= t.m <= 2 * t.k - 1:
        raise ValueError(f"EN numerator needs k <= m <= 2k-1, got k={t.k}, m={t.m}")


def en_terms(t: IndexTuple, convention: str = "zero-anchored") -> list:
    """The signed terms summed (after the leading 1) into the EN numerator."""
    _check_en(t)
    k, m = t.k, t.m
    rest = t.I[1:]
    c2 = comb(k, 2)
    out = []
    for i in range(m - k + 1):
        if convention == "zero-anchored":
            # subsequences through 0, markers t_1..t_{k-1} of total degree i
            size, markers = k - 1 + i, range(1, k)
            sign = (-1) ** (i + 1)
        elif convention == "as-stated":
            # literal display: J in I' of size k+i, markers t_0..t_{m-1}, leading minus
            size, markers = k + i, range(m)
            sign = -((-1) ** (i + 1))
        else:
            raise ValueError(f"unknown convention {convention!r}")
        for J in combinations(rest, size):
            for M in combinations_with_replacement(markers, i):
                out.append(ENTerm(J, M, i, sum(J) - c2 - sum(M), sign))
    return out


def hilbert_numerator_EN(t: IndexTuple, convention: str = "zero-anchored") -> UniPoly:
    """Numerator over (1-t)^k read off the Eagon-Northcott resolution.

    Raises ValueError when the convention produces a negative exponent.
    """
    terms = en_terms(t, convention)
    bad = [x for x in terms if x.exponent < 0]
    if bad:
        raise ValueError(f"{convention} convention gives negative exponent {bad[0].exponent} for {t}")
    return UniPoly.from_exponents([(0, 1)] + [(x.exponent, x.sign) for x in terms])


def degree_from_numerator(T: UniPoly, codim: int) -> int:
    """T^{(c)}(1) (-1)^c / c!, after checking that (1-t)^c divides T."""
    _, n = T.strip_one_minus_t(codim)
    if n < codim:
        raise ValueError(f"numerator vanishes at t=1 only to order {n} < {codim}")
    d = T
    for _ in range(codim):
        d = d.derivative()
    val = Fraction(d(1) * (-1) ** codim, factorial(codim))
    if val.denominator != 1:
        raise ArithmeticError("non-integral degree")
    return int(val)


def _check_kk1(t: IndexTuple):
    if t.m != t.k + 1 or t.I[0] != 0:
        raise ValueError("formula needs m = k+1 and i_0 = 0")


def hilbert_series_kk1(t: IndexTuple) -> HilbertSeries:
    """1 - sum_j t^{N-i_j-C(k,2)} + sum_{j<k} t^{N-j-C(k,2)} over (1-t)^k."""
    _check_kk1(t)
    k, N, c2 = t.k, t.N, comb(t.k, 2)
    terms = [(0, 1)]
    terms += [(N - i - c2, -1) for i in t.I[1:]]
    terms += [(N - j - c2, 1) for j in range(1, k)]
    return HilbertSeries(UniPoly.from_exponents(terms), k)


def degree_kk1(t: IndexTuple) -> int:
    _check_kk1(t)
    k, I = t.k, t.I[1:]
    e2 = sum(a * b for a, b in combinations(I, 2))
    return e2 - comb(k, 2) * sum(I) + comb(k + 1, 3) * (3 * k - 2) // 4


def gtp_u(k: int, order: int) -> list:
    """Taylor coefficients u_0..u_order of prod_{j<k} 1/(1+jt)."""
    den = TaylorSeries([1], order)
    for j in range(1, k):
        den = den * TaylorSeries([1, j], order)
    return [int(c) for c in den.invert().coeffs]


def degree_gtp(t: IndexTuple) -> int:
    """Coefficient of t^{m-k+1} in prod_{j>=1}(1+i_j t) / prod_{j<k}(1+jt)."""
    if t.I[0] != 0:
        raise ValueError("degree formula needs i_0 = 0")
    c = t.m - t.k + 1
    num = TaylorSeries([1], c)
    for i in t.I[1:]:
        num = num * TaylorSeries([1, i], c)
    den = TaylorSeries([1], c)
    for j in range(1, t.k):
        den = den * TaylorSeries([1, j], c)
    coeff = (num * den.invert())[c]
    if coeff.denominator != 1:
        raise ArithmeticError("non-integral series coefficient")
    return int(coeff)


BC_VARIANTS = ("resolution", "relation-degree", "printed")


def bc_numerator_terms(t: IndexTuple, variant: str = "resolution") -> list:
    """Signed exponents of the conjectured BC numerator (m = k+1).

    ``resolution``: read off the conjectured resolution, ring summand of
    degree N - k i_1 taken without the binomial shift. ``relation-degree``:
    the same with the degrees of G_0 and of the BC relations used instead.
    ``printed``: the Hilbert series display taken literally with the stray
    binomial absorbed into the last exponent.
    """
    _check_kk1(t)
    k, N, c2, i1 = t.k, t.N, comb(t.k, 2), t.I[1]
    if variant == "resolution":
        return ([(0, 1)] + [(N - i - c2, -1) for i in t.I[1:]] + [(N - k * i1, -1)]
                + [(N - j - c2, 1) for j in range(k)])
    if variant == "relation-degree":
        return ([(0, 1)] + [(N - i - c2, -1) for i in t.I[1:]] + [(N - k * i1 - c2, -1)]
                + [(N - i1 - s - c2, 1) for s in range(k)])
    if variant == "printed":
        return ([(0, 1)] + [(N - j - c2, -1) for j in range(1, k + 1)] + [(N - k * i1, -1)]
                + [(N - i1 - j - c2, 1) for j in range(1, k)])
    raise ValueError(f"unknown variant {variant!r}")


def hilbert_series_BC_conj(t: IndexTuple, variant: str = "resolution") -> Conjectural:
    terms = bc_numerator_terms(t, variant)
    if any(e < 0 for e, _ in terms):
        raise ValueError(f"variant {variant} gives a negative exponent for {t}")
    return Conjectural(HilbertSeries(UniPoly.from_exponents(terms), t.k), variant)


def degree_BC_conj(t: IndexTuple) -> Conjectural:
    i1 = t.I[1]
    return Conjectural(degree_kk1(t) - comb(t.k, 2) * i1 * (i1 - 1), "printed")
