"""This module provides the append-only count cache.

Each line of the cache file is one JSON record ``{"curve_hash", "T", "p", "k", "N"}``. Records are only ever appended; a corrupt line (e.g. a truncated write) is skipped with a warning when the file is loaded.
"""

from collections.abc import Iterable
import json
import logging
import os

_logger = logging.getLogger(__name__)

CacheKey = tuple[str, tuple[int, ...], int, int]


class CountCache:
    """This class provides a content-addressed cache of point counts keyed by (curve hash, T, p, k).
    """
    def __init__(self, path: str | None = None) -> None:
        """Initialises a CountCache object and loads existing records.

        Parameters
        ----------
        path : str | None, optional
            The JSON-lines file; None keeps the cache in memory only, by default None
        """
        self.path = path
        self.hits = 0
        self.misses = 0
        self._records: dict[CacheKey, int] = {}
        self._logger = logging.getLogger(__name__)
        if path is not None and os.path.exists(path):
            self._load()

    @staticmethod
    def key(curve_hash: str, subset: Iterable[int], p: int, k: int) -> CacheKey:
        return curve_hash, tuple(sorted(subset)), p, k

    def _load(self) -> None:
        with open(self.path, 'r', encoding='utf-8') as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    key = self.key(rec['curve_hash'], rec['T'], int(rec['p']), int(rec['k']))
                    self._records[key] = int(rec['N'])
                except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                    self._logger.warning(f' Skipping corrupt cache line {lineno} in {self.path}')
        self._logger.info(f' Loaded {len(self._records)} cached counts from {self.path}')

    def get(self, curve_hash: str, subset: Iterable[int], p: int, k: int) -> int | None:
        """Returns the cached count or None, updating the hit/miss statistics."""
        n_points = self._records.get(self.key(curve_hash, subset, p, k))
        if n_points is None:
            self.misses += 1
        else:
            self.hits += 1
        return n_points

    def put(self, curve_hash: str, subset: Iterable[int], p: int, k: int, n_points: int) -> None:
        """Stores a count and appends it to the file; a key already present is not written twice."""
        key = self.key(curve_hash, subset, p, k)
        if key in self._records:
            return
        self._records[key] = n_points
        if self.path is not None:
            rec = {'curve_hash': key[0], 'T': list(key[1]), 'p': p, 'k': k, 'N': n_points}
            with open(self.path, 'a', encoding='utf-8') as f:
                f.write(json.dumps(rec) + '\n')

    def __len__(self) -> int:
        return len(self._records)

    def stats(self) -> dict:
        return {'entries': len(self._records), 'hits': self.hits, 'misses': self.misses}
