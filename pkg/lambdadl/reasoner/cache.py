from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Callable, Hashable, Optional


class EntailmentCache:
    """
    Memo of boolean answers keyed by (question kind, operands).
    Purely observational: a hit returns what a recomputation would.
    Errors are not cached. Least recently used entries are dropped past `keep`.
    """

    def __init__(self, keep: int = 10_000) -> None:
        if keep < 1:
            raise ValueError("keep must be positive")
        self._keep = keep
        self._memo: "OrderedDict[Hashable, bool]" = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.evictions = 0

    def get(self, key: Hashable) -> Optional[bool]:
        with self._lock:
            if key in self._memo:
                self.hits += 1
                self._memo.move_to_end(key)
                return self._memo[key]
            self.misses += 1
            return None

    def put(self, key: Hashable, value: bool) -> None:
        with self._lock:
            self._memo[key] = value
            self._memo.move_to_end(key)
            while len(self._memo) > self._keep:
                self._memo.popitem(last=False)
                self.evictions += 1

    def get_or_compute(self, key: Hashable, compute: Callable[[], bool]) -> bool:
        hit = self.get(key)
        if hit is not None:
            return hit
        # Computed outside the lock; two racing callers compute the same answer.
        value = compute()
        self.put(key, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()
            self.hits = 0
            self.misses = 0
            self.evictions = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._memo)

    def snapshot(self) -> dict:
        with self._lock:
            return {"entries": len(self._memo), "hits": self.hits, "misses": self.misses, "evictions": self.evictions}
