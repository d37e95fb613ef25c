from __future__ import annotations

from lambdadl.dl.concepts import And, Or
from lambdadl.errors import TypingError, TypingErrorKind
from lambdadl.syntax.printer import show_type
from lambdadl.syntax.types import Concept, Func, ListType, Prim, Type


def _mismatch(rule: str, s: Type, t: Type) -> TypingError:
    return TypingError(
        TypingErrorKind.MISMATCH,
        rule,
        f"no common bound of {show_type(s, unicode=True)} and {show_type(t, unicode=True)}",
    )


def lub(s: Type, t: Type) -> Type:
    """Least upper bound; concepts join with ⊔, functions meet on domains."""
    if isinstance(s, Prim) and isinstance(t, Prim):
        if s.tag is not t.tag:
            raise _mismatch("LUB-PRIMITIVE", s, t)
        return s
    if isinstance(s, Concept) and isinstance(t, Concept):
        return s if s == t else Concept(Or(s.concept, t.concept))
    if isinstance(s, ListType) and isinstance(t, ListType):
        return ListType(lub(s.element, t.element))
    if isinstance(s, Func) and isinstance(t, Func):
        return Func(glb(s.domain, t.domain), lub(s.codomain, t.codomain))
    raise _mismatch("LUB", s, t)


def glb(s: Type, t: Type) -> Type:
    """Greatest lower bound; concepts meet with ⊓, functions join on domains."""
    if isinstance(s, Prim) and isinstance(t, Prim):
        if s.tag is not t.tag:
            raise _mismatch("GLB-PRIMITIVE", s, t)
        return s
    if isinstance(s, Concept) and isinstance(t, Concept):
        return s if s == t else Concept(And(s.concept, t.concept))
    if isinstance(s, ListType) and isinstance(t, ListType):
        return ListType(glb(s.element, t.element))
    if isinstance(s, Func) and isinstance(t, Func):
        return Func(lub(s.domain, t.domain), glb(s.codomain, t.codomain))
    raise _mismatch("GLB", s, t)
