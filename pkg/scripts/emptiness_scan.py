"""Emptiness of recurrence varieties off the BC arrangement, stratum by stratum."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

from _common import parse_config, write_result

from vdlab.groebner import Caps
from vdlab.ideals import IndexTuple
from vdlab.recurrences import emptiness_scan


@dataclass
class Config:
    """Emptiness scan over gcd-1 tuples (0, i_1, ..., i_{m-1}) with entries <= bound."""

    k: int = 3
    m: int = 4
    bound: int = 13
    workers: int = 1
    max_pairs: int = 50_000
    out: str = "results"


def main(argv=None):
    cfg = parse_config(Config, argv)
    t0 = time.perf_counter()
    recs = emptiness_scan(cfg.k, cfg.m, cfg.bound, Caps(cfg.max_pairs), cfg.workers)
    by = {r.tuple: r for r in recs}
    empty = [r.tuple for r in recs if r.empty]
    # tuples whose only obstruction is the open stratum, i.e. empty once roots may collide
    open_only = [r.tuple for r in recs
                 if r.strata.get((1,) * cfg.k) == "nonempty" and Counter(r.strata.values())["nonempty"] == 1]
    dual_breaks = [t for t in by if by[t].empty != by[IndexTuple(cfg.k, t).dual.I].empty]
    payload = {
        "tuples": len(recs), "empty": empty, "inconclusive": [r.tuple for r in recs if r.empty is None],
        "nonempty_only_on_open_stratum": open_only, "dual_symmetry_breaks": dual_breaks,
        "strata": {",".join(map(str, r.tuple)): r.strata for r in recs},
    }
    print(f"{len(empty)} EMPTY of {len(recs)}: {empty}")
    write_result(cfg.out, f"emptiness_k{cfg.k}_m{cfg.m}_b{cfg.bound}", cfg, payload, t0)


if __name__ == "__main__":
    main()
