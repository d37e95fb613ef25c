from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from lambdadl.syntax.terms import Term, Value


@dataclass(frozen=True)
class Stepped:
    """One reduction. `rule` fired at the redex; `via` lists the congruence rules around it, outermost first."""
    next: Term
    rule: str
    via: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Done:
    value: Value


class StuckKind(str, Enum):
    HEAD_NIL = "StuckHeadNil"
    TAIL_NIL = "StuckTailNil"


@dataclass(frozen=True)
class Stuck:
    kind: StuckKind
    redex: Term


EvalOutcome = Union[Stepped, Done, Stuck]


@dataclass(frozen=True)
class StuckReport:
    """evaluate's answer when reduction stops at `head nil` or `tail nil`."""
    kind: StuckKind
    term: Term
    redex: Term
    steps: int

    def message(self) -> str:
        what = "head" if self.kind is StuckKind.HEAD_NIL else "tail"
        return f"{self.kind.value}: {what} of an empty list after {self.steps} steps"
