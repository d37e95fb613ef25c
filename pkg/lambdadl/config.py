from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional


def _env_int(name: str, default: int) -> int:
    v = os.getenv(name)
    if v is None or v.strip() == "":
        return default
    try:
        return int(v)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {v!r}") from e


def _env_true(name: str) -> bool:
    return os.getenv(name, "").lower() == "true"


@dataclass(frozen=True)
class BudgetConfig:
    node_budget: int = 100_000
    time_budget_ms: int = 5_000

    @staticmethod
    def from_env() -> "BudgetConfig":
        return BudgetConfig(
            node_budget=_env_int("LAMBDADL_NODE_BUDGET", 100_000),
            time_budget_ms=_env_int("LAMBDADL_TIME_BUDGET_MS", 5_000),
        )


@dataclass(frozen=True)
class EvalConfig:
    step_limit: int = 1_000_000
    trace: bool = False

    def __post_init__(self) -> None:
        if self.step_limit <= 0:
            raise ValueError("step_limit must be positive")

    @staticmethod
    def from_env() -> "EvalConfig":
        return EvalConfig(
            step_limit=_env_int("LAMBDADL_STEP_LIMIT", 1_000_000),
            trace=_env_true("LAMBDADL_TRACE"),
        )


@dataclass(frozen=True)
class OracleConfig:
    max_size: int = 4

    @staticmethod
    def from_env() -> "OracleConfig":
        return OracleConfig(max_size=_env_int("LAMBDADL_COUNTERMODEL_MAX_SIZE", 4))


@dataclass(frozen=True)
class EventConfig:
    enabled: bool = False
    jsonl_path: Optional[str] = None

    @staticmethod
    def from_env() -> "EventConfig":
        return EventConfig(
            enabled=_env_true("LAMBDADL_EVENTS"),
            jsonl_path=os.getenv("LAMBDADL_EVENT_LOG") or None,
        )
