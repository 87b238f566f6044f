"""Linear recurrences with constant coefficients and the varieties of those vanishing on I.

A recurrence of order exactly k is u_n + a_1 u_{n-1} + ... + a_k u_{n-k} = 0
with a_k != 0; its characteristic roots with multiplicity pattern lambda give
the confluent stratum lambda of the recurrence variety.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations

from .groebner import Caps, GroebnerCapExceeded, saturate_off_arrangement
from .ideals import IndexTuple, PartitionSpec, build_confluent_ideal, build_ideal_BC, partitions
from .linalg import kernel, rank
from .scanning import Stopwatch, map_ordered
from .symmetric import reduced_schur


@dataclass(frozen=True)
class RecurrenceSpec:
    alphas: tuple
    roots: tuple | None = None

    def __post_init__(self):
        alphas = tuple(Fraction(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if not alphas or alphas[-1] == 0:
            raise ValueError("order-k recurrence needs a_k != 0")
        if self.roots is not None:
            object.__setattr__(self, "roots", tuple(Fraction(r) for r in self.roots))

    @property
    def k(self) -> int:
        return len(self.alphas)

    def characteristic(self) -> list:
        """Coefficients of t^k + a_1 t^{k-1} + ... + a_k, highest degree first."""
        return [Fraction(1), *self.alphas]


def vieta(roots) -> RecurrenceSpec:
    roots = tuple(Fraction(r) for r in roots)
    if any(r == 0 for r in roots):
        raise ValueError("zero root: the recurrence would have order below k")
    poly = [Fraction(1)]  # highest degree first
    for r in roots:
        poly = [a - r * b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
    return RecurrenceSpec(tuple(poly[1:]), roots)


def eval_recurrence(spec: RecurrenceSpec, initial, n_max: int) -> list:
    """u_0..u_{n_max} from u_0..u_{k-1}."""
    k = spec.k
    u = [Fraction(x) for x in initial]
    if len(u) != k:
        raise ValueError(f"need {k} initial values")
    if n_max < k:
        raise ValueError("n_max must be at least k")
    for n in range(k, n_max + 1):
        u.append(-sum(a * u[n - j] for j, a in enumerate(spec.alphas, 1)))
    return u


@dataclass
class ZeroReport:
    window: tuple
    zeros: list
    progressions: list  # (r, d) with 0 <= r < d: every window member of r mod d is zero
    sporadic: list
    trivial: bool = False
    note: str = "observed in window; not a proof"


def zero_report(spec: RecurrenceSpec, initial, n_max: int, d_max: int) -> ZeroReport:
    u = eval_recurrence(spec, initial, n_max)
    zeros = [n for n, v in enumerate(u) if v == 0]
    if len(zeros) == len(u):
        return ZeroReport((0, n_max), zeros, [], [], trivial=True)
    zs = set(zeros)
    found = []
    for d in range(1, d_max + 1):
        for r in range(d):
            members = range(r, n_max + 1, d)
            if len(members) < 3 or not all(n in zs for n in members):
                continue
            if any(d % d2 == 0 and (r - r2) % d2 == 0 for r2, d2 in found):
                continue  # implied by a coarser progression
            found.append((r, d))
    covered = {n for r, d in found for n in range(r, n_max + 1, d)}
    return ZeroReport((0, n_max), zeros, found, [n for n in zeros if n not in covered])


def nondegenerate(spec: RecurrenceSpec) -> bool:
    """No quotient of two distinct roots is a root of unity; for rational roots that is -1."""
    if spec.roots is None:
        raise ValueError("non-degeneracy needs the (rational) root multiset")
    vals = set(spec.roots)
    return not any(-x in vals for x in vals)


@dataclass
class RankResult:
    rank: int
    kernel: list | None


def vandermonde_rank(points, I) -> RankResult:
    """Rank of (x_c^i) over i in I; a kernel vector when the rank drops below k."""
    pts = [Fraction(x) for x in points]
    if any(x == 0 for x in pts):
        raise ValueError("points must be non-zero")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    M = [[x ** i for x in pts] for i in I]
    r = rank(M)
    ker = kernel(M)
    return RankResult(r, ker[0] if r < len(pts) else None)


def solution_from_kernel(points, coeffs, n_max: int) -> list:
    """u_n = sum_c coeffs_c x_c^n."""
    return [sum(Fraction(c) * Fraction(x) ** n for c, x in zip(coeffs, points)) for n in range(n_max + 1)]


# -- emptiness of recurrence varieties ------------------------------------------------

def stratum_generators(t: IndexTuple, lam: PartitionSpec):
    """Generators and variable count for the stratum of partition ``lam``.

    The stratum is localized off the BC arrangement in its own variables:
    roots non-zero and pairwise distinct.
    """
    if lam.is_distinct():
        return list(build_ideal_BC(t).nonzero), t.k
    return list(build_confluent_ideal(t, lam).nonzero), lam.s


def stratum_empty(t: IndexTuple, lam: PartitionSpec, caps: Caps | None = None,
                  method: str = "auto") -> bool:
    gens, n = stratum_generators(t, lam)
    if not gens:
        return False  # every point of the torus minus the arrangement qualifies
    return saturate_off_arrangement(gens, "BC", caps, n, method=method).empty_off_arrangement


@dataclass
class EmptinessRecord:
    tuple: tuple
    k: int
    strata: dict  # partition -> "empty" | "nonempty" | "inconclusive"
    empty: bool | None
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "inconclusive" if self.empty is None else "ok"


def emptiness_record(t: IndexTuple, caps: Caps | None = None, strata=None) -> EmptinessRecord:
    """EMPTY iff every partition stratum is empty off its arrangement."""
    lams = [PartitionSpec(p) for p in (strata or partitions(t.k))]
    out = {}
    with Stopwatch() as sw:
        for lam in lams:
            try:
                out[lam.parts] = "empty" if stratum_empty(t, lam, caps) else "nonempty"
            except GroebnerCapExceeded:
                out[lam.parts] = "inconclusive"
    vals = set(out.values())
    empty = None if "inconclusive" in vals and "nonempty" not in vals else vals == {"empty"}
    return EmptinessRecord(t.I, t.k, out, empty, sw.seconds)


def scan_tuples(k: int, m: int, bound: int):
    for rest in combinations(range(1, bound + 1), m - 1):
        t = IndexTuple(k, (0,) + rest)
        if t.gcd == 1:
            yield t


def emptiness_scan(k: int, m: int, bound: int, caps: Caps | None = None, workers: int = 1,
                   strata=None) -> list:
    fn = partial(emptiness_record, caps=caps, strata=strata)
    return map_ordered(fn, list(scan_tuples(k, m, bound)), workers)


@dataclass
class ForcingResult:
    base: tuple
    extra: int
    forced: bool | None
    survivors: list = field(default_factory=list)
    scope: str = "open stratum only (distinct non-zero roots); confluent strata not checked"

    @property
    def status(self) -> str:
        return "inconclusive" if self.forced is None else "ok"


def forcing_check(base: IndexTuple, extra: int, caps: Caps | None = None) -> ForcingResult:
    """Does every open-stratum solution vanishing on ``base`` also vanish at ``extra``?

    Each new maximal minor of the extended matrix is a monomial times the
    Vandermonde times a reduced Schur polynomial; the first two are units off
    the arrangement, so the reduced Schur polynomial is tested for membership
    in the saturated base ideal.
    """
    if extra in base.I:
        return ForcingResult(base.I, extra, True)
    ext = tuple(sorted(base.I + (extra,)))
    try:
        sat = saturate_off_arrangement(build_ideal_BC(base).nonzero, "BC", caps, base.k)
    except GroebnerCapExceeded:
        return ForcingResult(base.I, extra, None)
    if sat.empty_off_arrangement:
        return ForcingResult(base.I, extra, True)
    bad = []
    for J in combinations(ext, base.k):
        # reduced Schur polynomials are translation invariant; shift to non-negative exponents
        if extra in J and not sat.contains(reduced_schur(tuple(j - J[0] for j in J))):
            bad.append(J)
    return ForcingResult(base.I, extra, not bad, bad)


def forced_extensions(base: IndexTuple, candidates, caps: Caps | None = None) -> list:
    return [e for e in candidates if forcing_check(base, e, caps).forced]


__all__ = [
    "RecurrenceSpec", "vieta", "eval_recurrence", "ZeroReport", "zero_report", "nondegenerate",
    "RankResult", "vandermonde_rank", "solution_from_kernel", "EmptinessRecord", "emptiness_record",
    "emptiness_scan", "ForcingResult", "forcing_check", "forced_extensions", "stratum_empty",
]
