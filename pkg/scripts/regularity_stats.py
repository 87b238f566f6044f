"""How often the A and BC ideals reach the expected codimension for (k, m) = (3, 5)."""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_result

from vdlab.groebner import Caps, GroebnerCapExceeded, codimension, groebner_basis
from vdlab.ideals import build_ideal_BC
from vdlab.regularity import a_regularity_scan, tuples


@dataclass
class Config:
    """Regular fractions over gcd-1 tuples with entries <= bound."""

    k: int = 3
    m: int = 5
    bound: int = 9
    workers: int = 1
    max_pairs: int = 50_000
    out: str = "results"


def main(argv=None):
    cfg = parse_config(Config, argv)
    t0 = time.perf_counter()
    caps = Caps(cfg.max_pairs)
    expected = cfg.m - cfg.k + 1
    a = a_regularity_scan(cfg.k, cfg.m, cfg.bound, caps, cfg.workers)
    a_i1 = [r for r in a if r.tuple[1] == 1]
    bc_regular = bc_total = bc_inconclusive = 0
    for t in tuples(cfg.k, cfg.m, cfg.bound):
        try:
            gb = groebner_basis(build_ideal_BC(t).nonzero, caps=caps, nvars=t.k)
        except GroebnerCapExceeded:
            bc_inconclusive += 1
            continue
        bc_total += 1
        bc_regular += codimension(gb) == expected
    payload = {
        "A": {"tuples": len(a), "regular": sum(bool(r.is_regular) for r in a),
              "i1_is_1": len(a_i1), "i1_is_1_regular": sum(bool(r.is_regular) for r in a_i1),
              "regular_tuples": [r.tuple for r in a if r.is_regular]},
        "BC": {"tuples": bc_total, "regular": bc_regular, "inconclusive": bc_inconclusive},
    }
    print({k: {kk: vv for kk, vv in v.items() if not isinstance(vv, list)} for k, v in payload.items()})
    write_result(cfg.out, f"regularity_k{cfg.k}_m{cfg.m}_b{cfg.bound}", cfg, payload, t0)


if __name__ == "__main__":
    main()
