"""Process-wide cache of projective resolutions.

Entries are keyed by module fingerprint and hold the longest resolution
computed so far; a request for a shorter one is served by truncation. The
cache keeps at most ``resolution_cache.max_entries`` fingerprints and drops
the least recently used one beyond that.
"""

import logging
import threading
from collections import OrderedDict
from typing import Callable, Optional, TypeVar

from config.config_loader import get_config

logger = logging.getLogger(__name__)

R = TypeVar('R')

DEFAULT_MAX_ENTRIES = 256


class ResolutionCache:
    """Lock-protected LRU map fingerprint -> resolution.

    Lookups take the lock only for the dictionary access and the counters;
    computations run outside it, so two threads may compute the same entry
    and the longer one wins.
    """

    def __init__(self, max_entries: Optional[int] = None):
        self._entries: "OrderedDict[str, object]" = OrderedDict()
        self._lock = threading.Lock()
        self._max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def enabled(self) -> bool:
        return bool(get_config().get('resolution_cache.enabled', True))

    @property
    def max_entries(self) -> int:
        if self._max_entries is not None:
            return self._max_entries
        return int(get_config().get('resolution_cache.max_entries', DEFAULT_MAX_ENTRIES))

    def get_or_compute(self, fingerprint: str, length: int,
                       compute: Callable[[], R],
                       length_of: Callable[[R], int],
                       truncate: Callable[[R, int], R]) -> R:
        if not self.enabled():
            return compute()
        with self._lock:
            cached = self._entries.get(fingerprint)
            if cached is not None and length_of(cached) >= length:
                self._entries.move_to_end(fingerprint)
                self.hits += 1
            else:
                cached = None
                self.misses += 1
        if cached is not None:
            return truncate(cached, length)
        result = compute()
        with self._lock:
            current = self._entries.get(fingerprint)
            if current is None or length_of(current) < length_of(result):
                self._entries[fingerprint] = result
            self._entries.move_to_end(fingerprint)
            while len(self._entries) > max(1, self.max_entries):
                evicted, _ = self._entries.popitem(last=False)
                logger.debug(f"Evicted resolution of {evicted}")
        return result

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


resolution_cache = ResolutionCache()


def clear_caches() -> None:
    """Empty the resolution, tensor-algebra and projective caches."""
    from algebras.algebra import clear_tensor_cache
    from modrep.projectives import clear_projective_cache

    resolution_cache.clear()
    clear_tensor_cache()
    clear_projective_cache()
    logger.debug("Cleared resolution, tensor and projective caches")
