"""Shared plumbing for the experiment runners: dataclass configs from argv, result files."""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import platform
import time
from pathlib import Path

from vdlab import __version__
from vdlab.cli import jsonable

log = logging.getLogger("vdlab.scripts")


def parse_config(cls, argv=None, description: str | None = None):
    """Build a ``cls`` instance with one --flag per dataclass field."""
    ap = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in ("bool", bool):
            ap.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        else:
            typ = {"int": int, "str": str, "float": float}.get(f.type if isinstance(f.type, str) else f.type.__name__, str)
            ap.add_argument(flag, type=typ, default=f.default)
    ap.add_argument("-v", "--verbose", action="store_true")
    ns = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(message)s")
    return cls(**{f.name: getattr(ns, f.name) for f in dataclasses.fields(cls)})


def write_result(out_dir: str, name: str, config, payload, t0: float) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{name}.json"
    doc = {"experiment": name, "config": dataclasses.asdict(config), "vdlab": __version__,
           "python": platform.python_version(), "seconds": round(time.perf_counter() - t0, 2),
           "result": payload}
    path.write_text(json.dumps(jsonable(doc), indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")
    return path
