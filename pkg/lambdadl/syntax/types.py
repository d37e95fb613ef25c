from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Union

from lambdadl.dl.concepts import ConceptExpr, PrimTag, concept_names, nominal_names, role_names


@dataclass(frozen=True)
class Concept:
    concept: ConceptExpr


@dataclass(frozen=True)
class Func:
    domain: "Type"
    codomain: "Type"


@dataclass(frozen=True)
class ListType:
    element: "Type"


@dataclass(frozen=True)
class Prim:
    tag: PrimTag


Type = Union[Concept, Func, ListType, Prim]

BOOL = Prim(PrimTag.BOOL)
STRING = Prim(PrimTag.STRING)


def type_concepts(t: Type) -> list:
    if isinstance(t, Concept):
        return [t.concept]
    if isinstance(t, Func):
        return type_concepts(t.domain) + type_concepts(t.codomain)
    if isinstance(t, ListType):
        return type_concepts(t.element)
    return []


def type_names(t: Type) -> FrozenSet[str]:
    out: FrozenSet[str] = frozenset()
    for c in type_concepts(t):
        out |= concept_names(c) | nominal_names(c) | role_names(c)
    return out
