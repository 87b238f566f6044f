"""Linear relations among the Schur generators of an (m = k+1) Vandermonde ideal.

Generators are indexed by the omitted row: S_j is the positive Schur polynomial
of I minus i_j. With the Jacobi-Trudi rows (h_{i-(k-1)}, ..., h_i), every
k x k minor of the H matrix equals (-1)^{C(k,2)} times the positive Schur
polynomial, so that common sign drops out of each relation and all identities
below are stated for positive Schur polynomials.

Two certification rings are available:

* ``x``: expansion in x_1..x_k (the identity as stated);
* ``h``: expansion in the free polynomial ring Q[h_1, h_2, ...] with Schur
  polynomials replaced by their Jacobi-Trudi determinants. An identity there
  maps to the x identity under h_d -> h_d(x), so it certifies a stronger
  statement and stays cheap for larger k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .ideals import IndexTuple, build_H_matrix
from .linalg import det_bareiss
from .polyring import Polynomial, format_poly
from .symmetric import (complete_h, exponents_to_partition, jacobi_trudi_matrix,
                        reduced_exponents, schur, schur_partition)


@dataclass
class RelationCertificate:
    """A signed linear combination sum coeff_j * gen_j claimed to vanish."""

    tuple: IndexTuple
    index: int
    kind: str
    terms: list  # (sign, coefficient label, generator label)
    status: str = "unchecked"
    ring: str = "x"
    residual: Polynomial | None = None
    notes: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict:
        d = {
            "tuple": list(self.tuple.I), "k": self.tuple.k, "index": self.index, "kind": self.kind,
            "terms": [[s, c, g] for s, c, g in self.terms], "status": self.status, "ring": self.ring,
            "notes": self.notes,
        }
        if self.residual is not None:
            d["residual"] = format_poly(self.residual)
        return d


def _check_kk1(t: IndexTuple):
    if t.m != t.k + 1:
        raise ValueError("relations are stated for m = k+1")


def generator_exponents(t: IndexTuple, j: int) -> tuple:
    """Exponent set of S_j: I with i_j removed."""
    return tuple(i for r, i in enumerate(t.I) if r != j)


def _partition_label(J) -> str:
    parts = [p for p in exponents_to_partition(J) if p]
    return "s(" + ",".join(map(str, parts)) + ")" if parts else "1"


class _HRing:
    """Free ring Q[h_1..h_D]; Schur polynomials via Jacobi-Trudi determinants."""

    def __init__(self, D: int):
        self.D = max(D, 1)
        self.one = Polynomial.one(self.D)

    def h(self, d: int) -> Polynomial:
        if d < 0:
            return self.one * 0
        if d == 0:
            return self.one
        return Polynomial.var(self.D, d - 1)

    def schur(self, J) -> Polynomial:
        k = len(J)
        raw = det_bareiss(jacobi_trudi_matrix(J, self.h), self.one)
        return raw if comb(k, 2) % 2 == 0 else -raw


class _XRing:
    def __init__(self, k: int):
        self.k = k
        self.one = Polynomial.one(k)

    def h(self, d: int) -> Polynomial:
        return complete_h(d, self.k)

    def schur(self, J) -> Polynomial:
        return schur(J)


def _ring(kind: str, t: IndexTuple):
    if kind == "x":
        return _XRing(t.k)
    if kind == "h":
        return _HRing(max(t.I) + 1)
    raise ValueError(f"unknown ring {kind!r}")


def _auto_ring(t: IndexTuple, ring: str) -> str:
    if ring == "auto":
        return "x" if t.k <= 3 else "h"
    return ring


def arel_relation(t: IndexTuple, s: int, ring: str = "auto") -> RelationCertificate:
    """sum_{j=0..k} (-1)^{k-j} h_{i_j - s} S_j = 0 for 0 <= s <= k-1."""
    _check_kk1(t)
    k = t.k
    if not 0 <= s <= k - 1:
        raise ValueError(f"s must lie in [0, {k - 1}]")
    ring = _auto_ring(t, ring)
    R = _ring(ring, t)
    terms, total = [], R.one * 0
    for j in range(k, -1, -1):
        d = t.I[j] - s
        sign = (-1) ** (k - j)
        J = generator_exponents(t, j)
        terms.append((sign, f"h{d}" if d >= 0 else "0", f"S{j}={_partition_label(J)}"))
        if d >= 0:
            total = total + R.h(d) * R.schur(J) * sign
    return RelationCertificate(t, s, "A", terms, "verified" if not total else "failed", ring,
                               None if not total else total)


def det_Hl_expansion(t: IndexTuple, l: int) -> RelationCertificate:
    """Expand det of H extended by a copy of its l-th column (1-indexed) along that copy.

    Column l of H holds h_{i-(k-l)}, so the expansion is the A-relation with
    s = k - l. Valid for 1 <= l <= k; l = k exhibits S_0 in (S_1, ..., S_k).
    """
    _check_kk1(t)
    k = t.k
    if not 1 <= l <= k:
        raise ValueError(f"column index l must lie in [1, {k}] (columns are 1-indexed)")
    H = build_H_matrix(t)
    one = Polynomial.one(k)
    Hl = [row + [row[l - 1]] for row in H]
    det = det_bareiss(Hl, one)
    s = k - l
    # cofactor expansion along the appended column, minors as positive Schur polynomials
    sign_jt = -1 if comb(k, 2) % 2 else 1
    total = one * 0
    terms = []
    for j in range(k, -1, -1):
        d = t.I[j] - s
        cof = (-1) ** (j + k)
        minor = det_bareiss([H[r] for r in range(k + 1) if r != j], one)
        J = generator_exponents(t, j)
        if minor != schur(J) * sign_jt:
            raise ArithmeticError(f"minor {j} of H differs from its Schur generator")
        terms.append((cof, f"h{d}" if d >= 0 else "0", f"S{j}={_partition_label(J)}"))
        if d >= 0:
            total = total + complete_h(d, k) * schur(J) * cof
    ok = not det and not total
    return RelationCertificate(t, s, "detH", terms, "verified" if ok else "failed", "x",
                               None if ok else (det if det else total),
                               {"l": l, "s": s, "det_zero": not det})


def rectangle_coefficient(t: IndexTuple, s: int) -> tuple:
    """Partition ((i_1-1)^{k-1}, k-1-s); None when it is not a partition (k-1-s > i_1-1)."""
    k, i1 = t.k, t.I[1]
    last = k - 1 - s
    if last > i1 - 1:
        return None
    return (i1 - 1,) * (k - 1) + (last,)


BREL_SIGNS = (1, -1)


def brel_relation(t: IndexTuple, s: int, final_sign: int | None = None) -> RelationCertificate:
    """sum_{j=1..k} (-1)^{k-j} h_{i_j-i_1-s} S_j + e (-1)^k R_s G_0, tested for e = +1 and -1.

    R_s is the Schur polynomial of ((i_1-1)^{k-1}, k-1-s) in k variables and
    G_0 the reduced Schur polynomial of (i_1, ..., i_k). With ``final_sign``
    None both readings are tried and the certificate records which vanish.
    """
    _check_kk1(t)
    if t.I[0] != 0:
        raise ValueError("needs i_0 = 0")
    k, i1 = t.k, t.I[1]
    if not 0 <= s <= k - 1:
        raise ValueError(f"s must lie in [0, {k - 1}]")
    zero = Polynomial.zero(k)
    head, terms = zero, []
    for j in range(k, 0, -1):
        d = t.I[j] - i1 - s
        sign = (-1) ** (k - j)
        J = generator_exponents(t, j)
        terms.append((sign, f"h{d}" if d >= 0 else "0", f"S{j}={_partition_label(J)}"))
        if d >= 0:
            head = head + complete_h(d, k) * schur(J) * sign
    rect = rectangle_coefficient(t, s)
    G0_J = reduced_exponents(t.I[1:])
    G0 = schur(G0_J)
    tail = zero if rect is None else schur_partition(rect, k) * G0 * (-1) ** k
    rect_label = "0" if rect is None else "s(" + ",".join(map(str, rect)) + ")"
    holds = {}
    for e in BREL_SIGNS if final_sign is None else (final_sign,):
        holds[e] = not (head + tail * e)
    good = [e for e, ok in holds.items() if ok]
    terms.append(((-1) ** k, rect_label, f"G0={_partition_label(G0_J)}"))
    status = "verified" if good else "failed"
    residual = None if good else head + tail * (final_sign or 1)
    notes = {"final_sign_readings": {str(e): ok for e, ok in holds.items()},
             "rectangle_vanishes": rect is None}
    return RelationCertificate(t, s, "BC", terms, status, "x", residual, notes)


def all_kk1_tuples(k: int, bound: int, gcd_one: bool = True):
    for rest in combinations(range(1, bound + 1), k):
        t = IndexTuple(k, (0,) + rest)
        if not gcd_one or t.gcd == 1:
            yield t


__all__ = [
    "RelationCertificate", "arel_relation", "det_Hl_expansion", "brel_relation",
    "rectangle_coefficient", "generator_exponents", "all_kk1_tuples",
]
