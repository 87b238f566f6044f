"""Compare the conjectured BC Hilbert numerators and degree with the oracle (m = k+1)."""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_result

from vdlab.closed_forms import BC_VARIANTS, degree_BC_conj, hilbert_series_BC_conj
from vdlab.groebner import codimension, degree_of_quotient, groebner_basis, hilbert_series_quotient
from vdlab.ideals import build_ideal_BC
from vdlab.relations import all_kk1_tuples


@dataclass
class Config:
    """BC-flavour closed forms against Groebner bases, per k up to an entry bound."""

    k_min: int = 2
    k_max: int = 4
    bound2: int = 12
    bound3: int = 9
    bound4: int = 7
    out: str = "results"


def main(argv=None):
    cfg = parse_config(Config, argv)
    t0 = time.perf_counter()
    summary = {}
    for k in range(cfg.k_min, cfg.k_max + 1):
        bound = {2: cfg.bound2, 3: cfg.bound3}.get(k, cfg.bound4)
        row = {v: 0 for v in BC_VARIANTS} | {"degree": 0, "codim2": 0, "unit": 0, "tuples": 0}
        misses = {v: [] for v in BC_VARIANTS}
        for t in all_kk1_tuples(k, bound):
            gb = groebner_basis(build_ideal_BC(t).nonzero, nvars=k)
            row["tuples"] += 1
            if gb.is_unit():
                row["unit"] += 1
                continue
            hs = hilbert_series_quotient(gb)
            row["codim2"] += codimension(gb) == 2
            row["degree"] += degree_BC_conj(t).value == degree_of_quotient(gb)
            for v in BC_VARIANTS:
                try:
                    ok = hilbert_series_BC_conj(t, v).value == hs
                except ValueError:
                    ok = False
                row[v] += ok
                if not ok and len(misses[v]) < 5:
                    misses[v].append(t.I)
        summary[k] = {"bound": bound, "counts": row, "first_misses": misses}
        print(f"k={k} bound={bound}: {row}")
    write_result(cfg.out, "bc_variants", cfg, summary, t0)


if __name__ == "__main__":
    main()
