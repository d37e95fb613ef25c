"""
Typed λ-calculus whose types are description-logic concepts, checked and
evaluated against an ALCOI knowledge base.
"""

from lambdadl.checker import CheckerConfig, TypingContext, typecheck
from lambdadl.config import BudgetConfig, EvalConfig, EventConfig, OracleConfig
from lambdadl.dl import KnowledgeBase, parse_concept, parse_kb
from lambdadl.errors import (
    EvaluationError,
    LambdaDLError,
    ParseError,
    ResourceLimit,
    SemanticError,
    StepLimitExceeded,
    TypingError,
    TypingErrorKind,
)
from lambdadl.evaluator import StuckReport, evaluate, step
from lambdadl.reasoner import reasoner_for
from lambdadl.syntax import parse_term, pretty_print

__version__ = "1.0.0"

__all__ = [
    "CheckerConfig",
    "TypingContext",
    "typecheck",
    "BudgetConfig",
    "EvalConfig",
    "EventConfig",
    "OracleConfig",
    "KnowledgeBase",
    "parse_concept",
    "parse_kb",
    "EvaluationError",
    "LambdaDLError",
    "ParseError",
    "ResourceLimit",
    "SemanticError",
    "StepLimitExceeded",
    "TypingError",
    "TypingErrorKind",
    "StuckReport",
    "evaluate",
    "step",
    "reasoner_for",
    "parse_term",
    "pretty_print",
]
