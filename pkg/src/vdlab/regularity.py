"""Expected-codimension checks, the CKW criterion against the oracle, and periodicity scans."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field, fields
from functools import partial
from itertools import combinations

from .groebner import Caps, GroebnerCapExceeded, codimension, groebner_basis, krull_dimension
from .ideals import IndexTuple, build_ideal_A
from .scanning import Stopwatch, map_ordered
from .symmetric import complete_h

CKW_T_BOUND_NOTE = ("condition (3) checked for 3 <= t <= c+2; for t > c+2 every d+2 lies in "
                    "[2, t-1] so the condition holds automatically")


@dataclass
class RegularityRecord:
    tuple: tuple
    k: int
    flavor: str
    expected_codim: int
    oracle_codim: int | None = None
    is_regular: bool | None = None
    ckw_prediction: bool | None = None
    membership: bool | None = None
    degenerate: bool = False
    status: str = "ok"
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def agrees(self) -> bool | None:
        if self.ckw_prediction is None or self.is_regular is None:
            return None
        return self.ckw_prediction == self.is_regular


CSV_COLUMNS = [f.name for f in fields(RegularityRecord) if f.name != "notes"]


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        d = asdict(r)
        d["tuple"] = ",".join(map(str, r.tuple))
        d["seconds"] = f"{r.seconds:.4f}"
        w.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
    return buf.getvalue()


# -- CKW ----------------------------------------------------------------------------

def ckw_predicate(a: int, b: int, c: int) -> bool:
    """The three arithmetic conditions for h_a, h_b, h_c to be regular in 3 variables."""
    if not 0 < a < b < c:
        raise ValueError(f"need 0 < a < b < c, got {(a, b, c)}")
    if (a * b * c) % 6:
        return False
    if math.gcd(a + 1, b + 1, c + 1) != 1:
        return False
    for t in range(3, c + 3):
        if all((d + 2) % t in (0, 1) for d in (a, b, c)):
            return False
    return True


def _h3(d: int):
    return complete_h(d, 3)


def h_regular(degrees, caps: Caps | None = None) -> bool:
    """Regularity of (h_d) in 3 variables; a degree-0 entry gives the unit ideal, never regular."""
    if any(d == 0 for d in degrees):
        return False
    gb = groebner_basis([_h3(d) for d in degrees], caps=caps)
    return codimension(gb) == len(degrees)


def membership_hc(a: int, b: int, c: int, caps: Caps | None = None) -> bool:
    """h_c in (h_a, h_b) in 3 variables."""
    if not 0 < a < b < c:
        raise ValueError(f"need 0 < a < b < c, got {(a, b, c)}")
    gb = groebner_basis([_h3(a), _h3(b)], caps=caps)
    return gb.contains(_h3(c))


def _ckw_record(abc, caps=None) -> RegularityRecord:
    a, b, c = abc
    rec = RegularityRecord(abc, 3, "h", 3, ckw_prediction=ckw_predicate(a, b, c))
    with Stopwatch() as sw:
        try:
            gb = groebner_basis([_h3(a), _h3(b), _h3(c)], caps=caps)
            rec.oracle_codim = codimension(gb)
            rec.is_regular = rec.oracle_codim == 3
            rec.membership = membership_hc(a, b, c, caps)
        except GroebnerCapExceeded as exc:
            rec.status = "inconclusive"
            rec.notes["cap"] = str(exc)
    rec.seconds = sw.seconds
    rec.notes["t_bound"] = CKW_T_BOUND_NOTE
    return rec


def ckw_comparison_scan(bound: int, caps: Caps | None = None, workers: int = 1) -> list:
    triples = list(combinations(range(1, bound + 1), 3))
    return map_ordered(partial(_ckw_record, caps=caps), triples, workers)


# -- expected codimension of the A ideal -----------------------------------------------

def tuples(k: int, m: int, bound: int, gcd_one: bool = True, i1=None):
    """All I = (0, i_1, ..., i_{m-1}) with entries <= bound, optionally filtered by i_1."""
    for rest in combinations(range(1, bound + 1), m - 1):
        if i1 is not None and not i1(rest[0]):
            continue
        t = IndexTuple(k, (0,) + rest)
        if not gcd_one or t.gcd == 1:
            yield t


def a_codimension(t: IndexTuple, caps: Caps | None = None) -> int:
    """Codimension of the A ideal (minimal generators); k+1 for the unit ideal."""
    gens = build_ideal_A(t, minimal=t.I[0] == 0).nonzero
    gb = groebner_basis(gens, caps=caps, nvars=t.k)
    return codimension(gb)


def a_dimension(t: IndexTuple, caps: Caps | None = None) -> int:
    gens = build_ideal_A(t, minimal=t.I[0] == 0).nonzero
    return krull_dimension(groebner_basis(gens, caps=caps, nvars=t.k))


def _a_record(t: IndexTuple, caps=None) -> RegularityRecord:
    rec = RegularityRecord(t.I, t.k, "A", t.m - t.k + 1)
    with Stopwatch() as sw:
        try:
            rec.oracle_codim = a_codimension(t, caps)
            rec.is_regular = rec.oracle_codim == rec.expected_codim
            if t.k == 3 and t.m == 5 and t.I[1] == 1:
                degs = tuple(i - 2 for i in t.I[2:])
                rec.degenerate = 0 in degs
                reduced = h_regular(degs, caps)
                rec.notes["h_reduction"] = list(degs)
                rec.notes["h_reduction_regular"] = reduced
                rec.notes["h_reduction_agrees"] = reduced == rec.is_regular
        except GroebnerCapExceeded as exc:
            rec.status = "inconclusive"
            rec.notes["cap"] = str(exc)
    rec.seconds = sw.seconds
    if rec.oracle_codim is not None and rec.oracle_codim > rec.expected_codim and rec.oracle_codim <= t.k:
        # determinantal loci never exceed the expected codimension unless empty
        rec.notes["codim_bound_violated"] = True
    return rec


def a_regularity_scan(k: int, m: int, bound: int, caps: Caps | None = None, workers: int = 1,
                      i1=None) -> list:
    return map_ordered(partial(_a_record, caps=caps), list(tuples(k, m, bound, i1=i1)), workers)


# -- periodicity in the last entry ------------------------------------------------------

@dataclass
class PeriodReport:
    prefix: tuple
    k: int
    table: list  # (last entry, dimension or None)
    period: int | None
    start: int | None
    observed: bool = True


def eventual_period(values: list, min_repeats: int = 2):
    """(period, start) explaining the longest periodic tail of ``values``.

    For each p the tail start is pushed back while values[i] == values[i+p];
    candidates must span at least ``min_repeats`` periods. The earliest start
    wins and ties go to the smaller p, so multiples of the true period and
    coincidences near the end of the window lose.
    """
    n = len(values)
    best = (None, None)
    for p in range(1, n // min_repeats + 1):
        start = n - p
        while start > 0 and values[start - 1] == values[start - 1 + p]:
            start -= 1
        if n - start >= min_repeats * p and (best[1] is None or start < best[1]):
            best = (p, start)
    return best


def _dim_cell(t: IndexTuple, caps=None):
    try:
        return a_dimension(t, caps)
    except GroebnerCapExceeded:
        return None


def periodicity_scan(k: int, prefix: tuple, last_range: range, caps: Caps | None = None,
                     workers: int = 1) -> PeriodReport:
    prefix = tuple(prefix)
    if prefix[:2] != (0, 1):
        raise ValueError("prefix must start with 0, 1")
    lasts = [x for x in last_range if x > prefix[-1]]
    ts = [IndexTuple(k, prefix + (x,)) for x in lasts]
    dims = map_ordered(partial(_dim_cell, caps=caps), ts, workers)
    table = list(zip(lasts, dims))
    if any(d is None for d in dims):
        return PeriodReport(prefix, k, table, None, None)
    p, s = eventual_period(dims)
    return PeriodReport(prefix, k, table, p, None if s is None else lasts[s])
