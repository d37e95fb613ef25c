from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from lambdadl.dl.concepts import ConceptExpr, RoleExpr
from lambdadl.errors import Span
from lambdadl.syntax.types import Type

# -------------------------
# Values
# -------------------------


@dataclass(frozen=True)
class Object:
    name: str


@dataclass(frozen=True)
class Nil:
    annot: Type


@dataclass(frozen=True)
class ConsV:
    head: "Value"
    tail: "Value"


@dataclass(frozen=True)
class Closure:
    param: str
    annot: Type
    body: "Term"


@dataclass(frozen=True)
class PrimV:
    value: Union[bool, str]


Value = Union[Object, Nil, ConsV, Closure, PrimV]

TRUE = PrimV(True)
FALSE = PrimV(False)


def is_list_value(v: Value) -> bool:
    while isinstance(v, ConsV):
        v = v.tail
    return isinstance(v, Nil)


def list_items(v: Value) -> list:
    out = []
    while isinstance(v, ConsV):
        out.append(v.head)
        v = v.tail
    return out


def list_value(items: list, annot: Type) -> Value:
    out: Value = Nil(annot)
    for v in reversed(items):
        out = ConsV(v, out)
    return out


# -------------------------
# Terms
# -------------------------
# Spans are source positions for diagnostics; they never take part in equality.


def _span() -> Optional[Span]:
    return field(default=None, compare=False, repr=False)  # type: ignore[return-value]


@dataclass(frozen=True)
class Var:
    name: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Lit:
    value: Value
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Let:
    name: str
    bound: "Term"
    body: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Fix:
    body: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class If:
    cond: "Term"
    then: "Term"
    else_: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Cons:
    head: "Term"
    tail: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Null:
    arg: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Head:
    arg: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Tail:
    arg: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Query:
    concept: ConceptExpr
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Proj:
    subject: "Term"
    role: RoleExpr
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class CaseArm:
    concept: ConceptExpr
    binder: str
    body: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Case:
    scrutinee: "Term"
    arms: Tuple[CaseArm, ...]
    default: "Term"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Eq:
    lhs: "Term"
    rhs: "Term"
    span: Optional[Span] = _span()


Term = Union[Let, Fix, App, If, Cons, Null, Head, Tail, Query, Proj, Case, Eq, Var, Lit]


def as_value(t: Term) -> Optional[Value]:
    """
    The value a term denotes syntactically: a literal, or `cons v1 v2`
    with a proper-list tail.
    """
    if isinstance(t, Lit):
        return t.value
    if isinstance(t, Cons):
        h, tl = as_value(t.head), as_value(t.tail)
        if h is not None and tl is not None and is_list_value(tl):
            return ConsV(h, tl)
    return None


def is_value(t: Term) -> bool:
    return as_value(t) is not None


def span_of(t: Term) -> Optional[Span]:
    return getattr(t, "span", None)
