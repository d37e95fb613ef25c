from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class Span:
    """
    1-based source location of a token or term.
    """
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class LambdaDLError(Exception):
    pass


class ParseError(LambdaDLError):
    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class SemanticError(LambdaDLError):
    """
    KB attach-time failure. `violations` holds the ids of the failed
    validation rules plus their details.
    """

    def __init__(self, message: str, violations: Optional[List[str]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.violations = list(violations or [])

    def __str__(self) -> str:
        if not self.violations:
            return self.message
        return self.message + ": " + "; ".join(self.violations)


class ResourceLimit(LambdaDLError):
    def __init__(self, message: str, budget: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.budget = dict(budget or {})


class TypingErrorKind(str, Enum):
    MISMATCH = "Mismatch"
    UNSATISFIABLE_QUERY = "UnsatisfiableQuery"
    EMPTY_INTERSECTION = "EmptyIntersection"
    SUBSUMED_CASE = "SubsumedCase"
    UNBOUND_VARIABLE = "UnboundVariable"
    NON_CONCEPT_PROJECTION = "NonConceptProjection"
    NON_LIST_ELIM = "NonListElim"
    UNKNOWN_NAME = "UnknownName"
    UNKNOWN_OBJECT = "UnknownObject"
    UNTYPED_DATA_ROLE = "UntypedDataRole"


class TypingError(LambdaDLError):
    """
    Rejection by the type checker. Every rejection names the violated rule.
    """

    def __init__(self, kind: TypingErrorKind, rule: str, message: str, span: Optional[Span] = None) -> None:
        super().__init__(message)
        self.kind = kind
        self.rule = rule
        self.message = message
        self.span = span

    def __str__(self) -> str:
        where = f" {self.span}" if self.span else ""
        return f"error[{self.rule}]{where}: {self.message} ({self.kind.value})"


class EvaluationError(LambdaDLError):
    def __init__(self, message: str, term: Any = None) -> None:
        super().__init__(message)
        self.message = message
        self.term = term


class StepLimitExceeded(LambdaDLError):
    def __init__(self, steps: int, last_term: Any = None) -> None:
        super().__init__(f"step limit of {steps} exceeded")
        self.steps = steps
        self.last_term = last_term
