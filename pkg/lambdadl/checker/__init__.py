from lambdadl.checker.bounds import glb, lub
from lambdadl.checker.context import EMPTY_CONTEXT, TypingContext
from lambdadl.checker.subtyping import is_subtype, subtype_failure
from lambdadl.checker.typecheck import CheckerConfig, TypeChecker, typecheck

__all__ = [
    "glb",
    "lub",
    "EMPTY_CONTEXT",
    "TypingContext",
    "is_subtype",
    "subtype_failure",
    "CheckerConfig",
    "TypeChecker",
    "typecheck",
]
