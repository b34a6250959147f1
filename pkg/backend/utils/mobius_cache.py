"""
Möbius memo cache
Keys are interval profiles, so the whole of Π_n collapses to integer-partition many entries
"""
import os
import threading
from contextlib import contextmanager
from typing import Dict, Optional, Tuple


class MobiusCache:
    """
    Thread-safe in-memory store of μ values by normalized interval profile

    Disabling the cache must not change any result; it only forces the
    recursion to be re-run. `disabled()` bypasses the cache for the calling
    thread only, so overlapping bypasses on worker threads never leak.
    """

    def __init__(self, enabled: bool = True):
        self.store: Dict[Tuple[int, ...], int] = {}
        self.enabled = enabled
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()
        self._local = threading.local()

    @property
    def active(self) -> bool:
        """Whether lookups on the calling thread use the store"""
        return self.enabled and not getattr(self._local, 'bypass', 0)

    def get(self, key: Tuple[int, ...]) -> Optional[int]:
        """Cached μ for a profile, or None"""
        if not self.active:
            return None
        with self._lock:
            value = self.store.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def set(self, key: Tuple[int, ...], value: int):
        """Store μ for a profile"""
        if not self.active:
            return
        with self._lock:
            self.store[key] = value

    def clear(self):
        """Drop all entries and counters"""
        with self._lock:
            self.store.clear()
            self.hits = 0
            self.misses = 0

    @contextmanager
    def disabled(self):
        """Bypass the cache on this thread (used to check it is invisible); nests"""
        self._local.bypass = getattr(self._local, 'bypass', 0) + 1
        try:
            yield self
        finally:
            self._local.bypass -= 1

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {'size': len(self.store), 'hits': self.hits, 'misses': self.misses}


# Global Möbius cache instance
mobius_cache = MobiusCache(
    enabled=os.getenv('LATTICESYM_MOBIUS_CACHE', 'true').lower() == 'true'
)
