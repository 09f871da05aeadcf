"""
On-disk cache of Schubert polynomials and product expansions.

One JSON record per line, appended under an advisory lock. The cache only
speeds things up: records that fail to parse or fail a cheap sanity check
are skipped with a warning, and anything missing is recomputed.
"""

from __future__ import annotations

import fcntl
import json
import logging
import os
from pathlib import Path

from .perm import Permutation
from .poly import PRODUCT_MEMO, SCHUBERT_MEMO, Poly, SchubertExpansion

log = logging.getLogger(__name__)

ENV_VAR = "SCHUBERT_CACHE_DIR"
DEFAULT_DIR = ".schubert-cache"
FILENAME = "records.jsonl"


def cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or DEFAULT_DIR)


def _poly_ok(w: Permutation, f: Poly) -> bool:
    if not f.terms or not f.is_homogeneous() or f.degree() != w.length():
        return False
    exps, c = f.leading()
    code = list(w.code())
    while code and not code[-1]:
        code.pop()
    return c == 1 and tuple(exps) == tuple(code)


def _product_ok(u: Permutation, v: Permutation, e: SchubertExpansion) -> bool:
    total = u.length() + v.length()
    return all(w.length() == total and c > 0 for w, c in e.items())


class DiskCache:
    """Append-only JSON-lines store wired into the in-memory memo tables."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self.dir = Path(directory) if directory is not None else cache_dir()
        self.path = self.dir / FILENAME
        self.enabled = True
        self.skipped = 0
        self.loaded = {"poly": 0, "product": 0}
        self._pending: list[str] = []

    # -- reading --------------------------------------------------------

    def records(self):
        """Yield ``(kind, key, value)`` for every valid line on disk."""
        self.skipped = 0
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = self._decode(json.loads(line))
                except (ValueError, KeyError, TypeError, OverflowError) as exc:
                    self.skipped += 1
                    log.warning("skipping cache line %d of %s: %s", lineno, self.path, exc)
                    continue
                yield rec

    @staticmethod
    def _decode(obj):
        kind = obj["type"]
        if kind == "poly":
            w = Permutation(obj["perm"])
            f = Poly.from_json(obj["poly"])
            if not _poly_ok(w, f):
                raise ValueError(f"polynomial for {w} fails the degree/leading-term check")
            return kind, w, f
        if kind == "product":
            u, v = Permutation(obj["u"]), Permutation(obj["v"])
            e = SchubertExpansion.from_json(obj["expansion"])
            if not _product_ok(u, v, e):
                raise ValueError(f"expansion for {u}*{v} fails the length check")
            return kind, (u, v), e
        raise ValueError(f"unknown record type {kind!r}")

    def load(self):
        for kind, key, value in self.records():
            memo = SCHUBERT_MEMO if kind == "poly" else PRODUCT_MEMO
            memo.put(key, value, persist=False)
            self.loaded[kind] += 1

    # -- writing --------------------------------------------------------

    def _record_poly(self, w, f):
        self._pending.append(json.dumps(
            {"type": "poly", "perm": list(w.window), "poly": f.to_json()}, sort_keys=True))

    def _record_product(self, key, e):
        u, v = key
        self._pending.append(json.dumps(
            {"type": "product", "u": list(u.window), "v": list(v.window), "expansion": e.to_json()},
            sort_keys=True))

    def flush(self):
        if not self._pending or not self.enabled:
            self._pending.clear()
            return
        lines, self._pending = self._pending, []
        try:
            with open(self.path, "a", encoding="utf-8") as fh:
                fcntl.flock(fh, fcntl.LOCK_EX)
                try:
                    fh.write("\n".join(lines) + "\n")
                    fh.flush()
                finally:
                    fcntl.flock(fh, fcntl.LOCK_UN)
        except OSError as exc:
            log.warning("cache write failed (%s); continuing without cache", exc)
            self.enabled = False

    # -- lifecycle ------------------------------------------------------

    def attach(self) -> bool:
        """Load existing records and start recording new ones.

        Returns False (after a warning) when the directory is not usable.
        """
        try:
            self.dir.mkdir(parents=True, exist_ok=True)
            if not os.access(self.dir, os.W_OK):
                raise PermissionError(f"{self.dir} is not writable")
        except OSError as exc:
            log.warning("cache directory unusable (%s); running without cache", exc)
            self.enabled = False
            return False
        self.load()
        SCHUBERT_MEMO.sink = self._record_poly
        PRODUCT_MEMO.sink = self._record_product
        return True

    def detach(self):
        self.flush()
        SCHUBERT_MEMO.sink = None
        PRODUCT_MEMO.sink = None

    def clear(self) -> int:
        """Delete the cache file; returns the number of lines removed."""
        if not self.path.exists():
            return 0
        with open(self.path, encoding="utf-8") as fh:
            n = sum(1 for line in fh if line.strip())
        self.path.unlink()
        return n

    def stats(self) -> dict:
        counts = {"poly": 0, "product": 0}
        for kind, _, _ in self.records():
            counts[kind] += 1
        return {"path": str(self.path), "poly": counts["poly"], "product": counts["product"],
                "skipped": self.skipped}
