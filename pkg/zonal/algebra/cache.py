"""JackTable storage: an in-process table plus an optional JSON file per entry.

File names encode the key, e.g. ``P_2-1_a2-1_n3.json`` for κ=(2,1), α=2/1,
N=3. Files are written to a temporary name and renamed into place, so
concurrent writers of the same entry leave one complete file behind.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from ..config import settings
from ..verify.schemas import SymPolyPayload
from .partitions import Partition
from .symfunc import SymPoly

logger = logging.getLogger(__name__)

CACHE_VERSION = 1

Key = tuple[Partition, Fraction, int]


class JackCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self._lock = threading.Lock()
        self._table: dict[Key, SymPoly] = {}
        self.directory: Path | None = None
        self.set_directory(directory)

    def set_directory(self, directory: str | os.PathLike | None) -> None:
        self.directory = Path(directory) if directory else None
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)
            logger.debug(f"Jack cache directory: {self.directory}")

    def _path(self, key: Key) -> Path:
        kappa, alpha, nvars = key
        parts = "-".join(map(str, kappa.parts)) or "0"
        return self.directory / f"P_{parts}_a{alpha.numerator}-{alpha.denominator}_n{nvars}.json"

    def get(self, key: Key) -> SymPoly | None:
        poly = self._table.get(key)
        if poly is not None or self.directory is None:
            return poly
        path = self._path(key)
        if not path.exists():
            return None
        try:
            payload = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"✗ Ignoring unreadable cache file {path.name}: {e}")
            return None
        if not isinstance(payload, dict) or payload.get("version") != CACHE_VERSION:
            logger.debug(f"  - Stale cache file {path.name}")
            return None
        try:
            checked = SymPolyPayload.model_validate(payload)
        except ValidationError as e:
            logger.warning(f"✗ Ignoring malformed cache file {path.name}: {e.error_count()} errors")
            return None
        poly = SymPoly.from_json(checked.model_dump())
        with self._lock:
            self._table[key] = poly
        return poly

    def put(self, key: Key, poly: SymPoly) -> None:
        with self._lock:
            self._table[key] = poly
        if self.directory is None:
            return
        payload = {"version": CACHE_VERSION, **poly.to_json()}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh, sort_keys=True)
            os.replace(tmp, self._path(key))
        except OSError as e:
            logger.warning(f"✗ Could not write cache entry: {e}")
            if os.path.exists(tmp):
                os.unlink(tmp)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()

    def __len__(self) -> int:
        return len(self._table)


jack_cache = JackCache(settings.CACHE_DIR)
