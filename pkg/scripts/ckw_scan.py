"""CKW arithmetic predicate versus the Groebner oracle for (h_a, h_b, h_c) in 3 variables."""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from _common import parse_config, write_result

from vdlab.groebner import Caps
from vdlab.regularity import ckw_comparison_scan, records_to_csv


@dataclass
class Config:
    """All a < b < c <= bound."""

    bound: int = 12
    workers: int = 1
    max_pairs: int = 50_000
    out: str = "results"


def main(argv=None):
    cfg = parse_config(Config, argv)
    t0 = time.perf_counter()
    recs = ckw_comparison_scan(cfg.bound, Caps(cfg.max_pairs), cfg.workers)
    Path(cfg.out).mkdir(parents=True, exist_ok=True)
    (Path(cfg.out) / f"ckw_b{cfg.bound}.csv").write_text(records_to_csv(recs))
    payload = {
        "triples": len(recs),
        "regular": sum(bool(r.is_regular) for r in recs),
        "inconclusive": [r.tuple for r in recs if r.status != "ok"],
        "mismatches": [r.tuple for r in recs if r.agrees() is False],
        "member_not_regular": sum(bool(r.membership) for r in recs),
        "neither_regular_nor_member": [r.tuple for r in recs if r.is_regular is False and r.membership is False],
    }
    print({k: v if not isinstance(v, list) else len(v) for k, v in payload.items()})
    write_result(cfg.out, f"ckw_b{cfg.bound}", cfg, payload, t0)


if __name__ == "__main__":
    main()
