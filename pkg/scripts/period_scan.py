"""Dimension of the A quotient as the last entry of I grows, with an eventual-period detector."""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_result

from vdlab.groebner import Caps
from vdlab.ideals import parse_tuple
from vdlab.regularity import periodicity_scan


@dataclass
class Config:
    """Prefixes are ';'-separated tuples starting 0,1."""

    k: int = 3
    prefixes: str = "0,1,3,4;0,1,3,5;0,1,4,6;0,1,4,7;0,1,5,7"
    span: int = 36
    workers: int = 1
    max_pairs: int = 50_000
    out: str = "results"


def main(argv=None):
    cfg = parse_config(Config, argv)
    t0 = time.perf_counter()
    out = {}
    for text in cfg.prefixes.split(";"):
        prefix = parse_tuple(text)
        rep = periodicity_scan(cfg.k, prefix, range(prefix[-1] + 1, prefix[-1] + cfg.span + 1),
                               Caps(cfg.max_pairs), cfg.workers)
        # stability: the detected period must survive dropping the last period's worth of data
        shorter = periodicity_scan(cfg.k, prefix, range(prefix[-1] + 1, prefix[-1] + cfg.span + 1 - (rep.period or 0)),
                                   Caps(cfg.max_pairs), cfg.workers) if rep.period else rep
        out[text] = {"table": rep.table, "period": rep.period, "from": rep.start,
                     "stable": shorter.period == rep.period}
        print(f"{text}: period {rep.period} from {rep.start} (stable {out[text]['stable']})")
    write_result(cfg.out, f"periods_k{cfg.k}", cfg, out, t0)


if __name__ == "__main__":
    main()
