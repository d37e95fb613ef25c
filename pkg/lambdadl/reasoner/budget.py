from __future__ import annotations

import time
from typing import Optional

from lambdadl.config import BudgetConfig
from lambdadl.errors import ResourceLimit
from lambdadl.events import emit


def now_ms() -> int:
    return int(time.monotonic() * 1000)


class ResourceBudget:
    """
    Per-question budget for one tableau run.
    - Counts created nodes and branch points against node_budget.
    - Enforces a wall-clock deadline.
    Exhaustion raises ResourceLimit; it is never turned into an answer.
    """

    def __init__(self, cfg: Optional[BudgetConfig] = None, question: str = "") -> None:
        self.cfg = cfg or BudgetConfig()
        self.question = question
        self.started_ms = now_ms()
        self.deadline_ms = self.started_ms + self.cfg.time_budget_ms
        self.nodes = 0
        self.branches = 0

    @property
    def spent(self) -> int:
        return self.nodes + self.branches

    def charge_node(self, n: int = 1) -> None:
        self.nodes += n
        self._check_spent()

    def charge_branch(self) -> None:
        self.branches += 1
        self._check_spent()

    def check(self) -> None:
        if now_ms() > self.deadline_ms:
            self._exhausted("time budget exhausted")

    def _check_spent(self) -> None:
        if self.spent > self.cfg.node_budget:
            self._exhausted("node budget exhausted")

    def _exhausted(self, reason: str) -> None:
        snap = self.snapshot()
        emit("reasoner.budget_exceeded", reason=reason, **snap)
        raise ResourceLimit(f"{reason} while deciding {self.question or 'a query'}", snap)

    def snapshot(self) -> dict:
        return {
            "node_budget": self.cfg.node_budget,
            "time_budget_ms": self.cfg.time_budget_ms,
            "nodes": self.nodes,
            "branches": self.branches,
            "elapsed_ms": now_ms() - self.started_ms,
        }
