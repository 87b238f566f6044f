"""Content-addressed on-disk cache of reduced Groebner bases.

Keys hash the canonical serialization of (generators, order, nvars); the
reduced basis of an ideal is unique, so a hit is returned verbatim. Writers
take an exclusive ``flock`` and replace entries atomically; readers never lock.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import logging
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path

from .groebner import Caps, GroebnerBasis, groebner_basis
from .polyring import format_poly, parse_poly

log = logging.getLogger(__name__)

FORMAT = 1


def default_dir() -> Path:
    env = os.environ.get("VDLAB_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "vdlab"


def cache_key(gens, order: str, nvars: int) -> str:
    canon = sorted({format_poly(g.monic(order), order) for g in gens if g})
    blob = json.dumps({"f": FORMAT, "gens": canon, "order": order, "nvars": nvars}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


class GBCache:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else default_dir()
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    @contextmanager
    def _lock(self):
        self.root.mkdir(parents=True, exist_ok=True)
        with open(self.root / ".lock", "w") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                yield
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)

    def get(self, key: str) -> GroebnerBasis | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
            n = data["nvars"]
            basis = tuple(parse_poly(s, n) for s in data["basis"])
            return GroebnerBasis(basis, data["order"], n)
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", path.name, exc)
            return None

    def put(self, key: str, gb: GroebnerBasis) -> None:
        path = self._path(key)
        payload = json.dumps({"basis": [format_poly(g, gb.order) for g in gb.basis],
                              "order": gb.order, "nvars": gb.nvars}, sort_keys=True)
        with self._lock():
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, path)

    def groebner(self, gens, order: str = "degrevlex", caps: Caps | None = None,
                 nvars: int | None = None) -> GroebnerBasis:
        gens = list(gens)
        n = nvars if nvars is not None else gens[0].nvars
        key = cache_key(gens, order, n)
        hit = self.get(key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        gb = groebner_basis(gens, order, caps, nvars=n)
        self.put(key, gb)
        return gb


def cached_groebner(gens, order="degrevlex", caps=None, nvars=None, cache: GBCache | None = None):
    if cache is None:
        return groebner_basis(list(gens), order, caps, nvars=nvars)
    return cache.groebner(gens, order, caps, nvars)
