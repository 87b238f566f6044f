"""Index tuples and the generator sets of the Vandermonde ideals built from them.

Flavors:

* ``coarse-minor``: maximal minors of the generalized Vandermonde matrix itself;
* ``A``: Schur polynomials S_J for every k-subsequence J (braid arrangement removed);
* ``BC``: reduced Schur polynomials (coordinate hyperplanes removed as well);
* ``confluent``: maximal minors of the matrix whose columns carry i^r x_j^i,
  one block per part of a partition of k (characteristic roots with multiplicity).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import combinations

from .linalg import det_bareiss, leibniz_alternant
from .polyring import Polynomial
from .symmetric import complete_h, reduced_schur, schur


def parse_tuple(text: str) -> tuple:
    """``"0,1,3,7"`` -> (0, 1, 3, 7)."""
    try:
        vals = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise ValueError(f"malformed tuple {text!r}") from exc
    if not vals:
        raise ValueError("empty tuple")
    return vals


@dataclass(frozen=True)
class IndexTuple:
    """The pair (k; I) with I strictly increasing and len(I) >= k."""

    k: int
    I: tuple

    def __post_init__(self):
        I = tuple(int(i) for i in self.I)
        object.__setattr__(self, "I", I)
        if self.k < 1:
            raise ValueError("k must be positive")
        if I and I[0] < 0:
            raise ValueError("entries must be non-negative")
        if any(a >= b for a, b in zip(I, I[1:])):
            raise ValueError(f"entries must be strictly increasing: {I}")
        if len(I) < self.k:
            raise ValueError(f"need at least k={self.k} entries, got {len(I)}")

    @classmethod
    def parse(cls, k: int, text: str) -> "IndexTuple":
        return cls(k, parse_tuple(text))

    @property
    def m(self) -> int:
        return len(self.I)

    @property
    def N(self) -> int:
        return sum(self.I[1:])

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, (i - self.I[0] for i in self.I[1:]), 0)

    @property
    def dual(self) -> "IndexTuple":
        top = self.I[-1]
        return IndexTuple(self.k, tuple(sorted(top - i for i in self.I)))

    def shifted(self, l: int) -> "IndexTuple":
        return IndexTuple(self.k, tuple(i + l for i in self.I))

    def subsequences(self) -> list:
        return list(combinations(self.I, self.k))

    def __str__(self):
        return f"({self.k}; {','.join(map(str, self.I))})"


@dataclass(frozen=True)
class PartitionSpec:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    def is_distinct(self) -> bool:
        return all(p == 1 for p in self.parts)


def partitions(k: int, largest: int | None = None):
    """All partitions of k, largest part first, in reverse lexicographic order."""
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for p in range(min(k, largest), 0, -1):
        for rest in partitions(k - p, p):
            yield (p,) + rest


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple
    provenance: tuple
    flavor: str
    nvars: int
    tags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.generators) != len(self.provenance):
            raise ValueError("one provenance entry per generator")
        if len(set(self.provenance)) != len(self.provenance):
            raise ValueError("duplicate provenance")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def by_subsequence(self, J) -> Polynomial:
        return self.generators[self.provenance.index(tuple(J))]

    @cached_property
    def nonzero(self) -> tuple:
        return tuple(g for g in self.generators if g)


def _tags(t: IndexTuple) -> frozenset:
    if t.gcd > 1:
        warnings.warn(f"{t} has gcd {t.gcd}; the ideal is a rescaling of a smaller one", stacklevel=3)
        return frozenset({"rescalable"})
    return frozenset()


def build_ideal_A(t: IndexTuple, minimal: bool = False) -> GeneratorSet:
    """Schur polynomials of k-subsequences; ``minimal`` keeps only those through i_0 = 0."""
    if minimal and t.I[0] != 0:
        raise ValueError("minimal mode needs i_0 = 0")
    subs = [J for J in t.subsequences() if not minimal or J[0] == t.I[0]]
    gens = tuple(schur(J) for J in subs)
    return GeneratorSet(gens, tuple(subs), "A", t.k, _tags(t))


def build_ideal_BC(t: IndexTuple) -> GeneratorSet:
    """Reduced Schur polynomials of k-subsequences, repeated polynomials collapsed."""
    gens, prov, seen = [], [], set()
    for J in t.subsequences():
        g = reduced_schur(J)
        if g in seen:
            continue
        seen.add(g)
        gens.append(g)
        prov.append(J)
    return GeneratorSet(tuple(gens), tuple(prov), "BC", t.k, _tags(t))


def build_ideal_coarse(t: IndexTuple) -> GeneratorSet:
    """Maximal minors of M_{k;I} = (x_c^i), rows i in I."""
    subs = t.subsequences()
    gens = tuple(leibniz_alternant(t.k, J) for J in subs)
    return GeneratorSet(gens, tuple(subs), "coarse-minor", t.k, _tags(t))


def build_H_matrix(t: IndexTuple) -> list:
    """m x k matrix with row r = (h_{i_r-(k-1)}, ..., h_{i_r}) in k variables."""
    k = t.k
    return [[complete_h(i - (k - 1) + c, k) for c in range(k)] for i in t.I]


def confluent_matrix(t: IndexTuple, lam: PartitionSpec) -> list:
    """Rows i in I; the block for part j holds (x_j^i, i x_j^i, ..., i^{lam_j-1} x_j^i)."""
    if lam.k != t.k:
        raise ValueError(f"partition {lam.parts} is not a partition of k={t.k}")
    s = lam.s
    rows = []
    for i in t.I:
        row = []
        for j, part in enumerate(lam.parts):
            mono = tuple(i if c == j else 0 for c in range(s))
            row.extend(Polynomial(s, {mono: i ** r}) for r in range(part))
        rows.append(row)
    return rows


def build_confluent_ideal(t: IndexTuple, lam: PartitionSpec) -> GeneratorSet:
    """All k x k minors of the confluent matrix, in s = len(lam) variables."""
    M = confluent_matrix(t, lam)
    one = Polynomial.one(lam.s)
    gens, prov = [], []
    for rows in combinations(range(t.m), t.k):
        gens.append(det_bareiss([M[r] for r in rows], one))
        prov.append(tuple(t.I[r] for r in rows))
    return GeneratorSet(tuple(gens), tuple(prov), "confluent", lam.s, _tags(t) | {f"lambda={lam.parts}"})
