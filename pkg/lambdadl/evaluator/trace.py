from __future__ import annotations

import json
import sys
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, TextIO

from lambdadl.events import now_ms
from lambdadl.syntax.printer import pretty_print
from lambdadl.syntax.terms import Term


@dataclass
class TraceEntry:
    index: int
    rule: Optional[str]       # None for the initial term
    term: str
    ts_ms: int


class EvalTrace:
    """
    Reduction trace:
    - in-memory list of entries
    - `index: term` lines on the stream, the fired rule as a trailing comment
    - optional JSONL append file
    """

    def __init__(
        self,
        stream: Optional[TextIO] = None,
        jsonl_path: Optional[str] = None,
        unicode: bool = False,
    ) -> None:
        self._entries: List[TraceEntry] = []
        self._stream = stream if stream is not None else sys.stderr
        self._jsonl_path = jsonl_path
        self._unicode = unicode

    def record(self, index: int, term: Term, rule: Optional[str] = None) -> None:
        entry = TraceEntry(index=index, rule=rule, term=pretty_print(term, unicode=self._unicode), ts_ms=now_ms())
        self._entries.append(entry)

        line = f"{index}: {entry.term}"
        if rule:
            line += f"  // {rule}"
        print(line, file=self._stream)

        # Best-effort JSONL append
        if self._jsonl_path:
            try:
                with open(self._jsonl_path, "a", encoding="utf-8") as f:
                    f.write(json.dumps(asdict(entry)) + "\n")
            except Exception:
                pass

    def rules(self) -> List[str]:
        return [e.rule for e in self._entries if e.rule]

    def list(self, limit: int = 50) -> List[Dict[str, Any]]:
        limit = max(1, limit)
        return [asdict(e) for e in self._entries[-limit:]]

    def __len__(self) -> int:
        return len(self._entries)
