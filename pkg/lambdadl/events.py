from __future__ import annotations

import json
import sys
import threading
import time
from typing import Any, Dict, List, Optional

from lambdadl.config import EventConfig


def now_ms() -> int:
    return int(time.time() * 1000)


class EventLog:
    """
    Structured event log:
    - in-memory ring of recent events
    - printed as dicts to stderr when enabled
    - optional JSONL append file
    """

    def __init__(self, cfg: Optional[EventConfig] = None, keep: int = 500) -> None:
        self.cfg = cfg or EventConfig()
        self._keep = keep
        self._events: List[Dict[str, Any]] = []
        self._lock = threading.Lock()

    def configure(self, cfg: EventConfig) -> None:
        self.cfg = cfg

    def emit(self, event: str, **fields: Any) -> Dict[str, Any]:
        ev = {"ts_ms": now_ms(), "event": event, **fields}
        with self._lock:
            self._events.append(ev)
            if len(self._events) > self._keep:
                del self._events[: len(self._events) - self._keep]

        if self.cfg.enabled:
            print({"lambdadl": event, **fields}, file=sys.stderr)

        # Best-effort JSONL append
        if self.cfg.jsonl_path:
            try:
                with open(self.cfg.jsonl_path, "a", encoding="utf-8") as f:
                    f.write(json.dumps(ev, default=str) + "\n")
            except Exception:
                pass
        return ev

    def list(self, limit: int = 50, event: Optional[str] = None) -> List[Dict[str, Any]]:
        limit = max(1, min(limit, self._keep))
        with self._lock:
            rows = [e for e in self._events if event is None or e["event"] == event]
        return rows[-limit:]

    def clear(self) -> None:
        with self._lock:
            self._events.clear()


events = EventLog(EventConfig.from_env())


def emit(event: str, **fields: Any) -> Dict[str, Any]:
    return events.emit(event, **fields)
