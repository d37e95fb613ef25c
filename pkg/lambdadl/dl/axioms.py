from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Union

from lambdadl.dl.concepts import (
    TOP,
    ConceptExpr,
    Exists,
    Forall,
    RoleExpr,
    concept_names,
    nominal_names,
    role_name,
    role_names,
)


@dataclass(frozen=True)
class Subsumption:
    lhs: ConceptExpr
    rhs: ConceptExpr


@dataclass(frozen=True)
class ConceptEquality:
    lhs: ConceptExpr
    rhs: ConceptExpr


@dataclass(frozen=True)
class ConceptAssertion:
    object: str
    concept: ConceptExpr


@dataclass(frozen=True)
class RoleAssertion:
    subject: str
    object: str
    role: RoleExpr


@dataclass(frozen=True)
class DataAssertion:
    subject: str
    role: str
    value: Union[str, bool]


@dataclass(frozen=True)
class ObjectEquivalence:
    a: str
    b: str


Axiom = Union[Subsumption, ConceptEquality, ConceptAssertion, RoleAssertion, DataAssertion, ObjectEquivalence]

TERMINOLOGICAL = (Subsumption, ConceptEquality)
ASSERTIONAL = (ConceptAssertion, RoleAssertion, DataAssertion, ObjectEquivalence)


def is_terminological(ax: Axiom) -> bool:
    return isinstance(ax, TERMINOLOGICAL)


def domain_axiom(role: RoleExpr, c: ConceptExpr) -> Subsumption:
    """Domain(R,C) ↦ ∃R.⊤ ⊑ C"""
    return Subsumption(Exists(role, TOP), c)


def range_axiom(role: RoleExpr, c: ConceptExpr) -> Subsumption:
    """Range(R,C) ↦ ⊤ ⊑ ∀R.C"""
    return Subsumption(TOP, Forall(role, c))


def expand(ax: Axiom) -> List[Axiom]:
    """ConceptEquality is mutual inclusion; everything else is kept."""
    if isinstance(ax, ConceptEquality):
        return [Subsumption(ax.lhs, ax.rhs), Subsumption(ax.rhs, ax.lhs)]
    return [ax]


def axiom_concepts(ax: Axiom) -> List[ConceptExpr]:
    if isinstance(ax, (Subsumption, ConceptEquality)):
        return [ax.lhs, ax.rhs]
    if isinstance(ax, ConceptAssertion):
        return [ax.concept]
    return []


def axiom_objects(ax: Axiom) -> FrozenSet[str]:
    names = set()
    for c in axiom_concepts(ax):
        names |= nominal_names(c)
    if isinstance(ax, ConceptAssertion):
        names.add(ax.object)
    elif isinstance(ax, RoleAssertion):
        names.update((ax.subject, ax.object))
    elif isinstance(ax, DataAssertion):
        names.add(ax.subject)
    elif isinstance(ax, ObjectEquivalence):
        names.update((ax.a, ax.b))
    return frozenset(names)


def axiom_concept_names(ax: Axiom) -> FrozenSet[str]:
    names: FrozenSet[str] = frozenset()
    for c in axiom_concepts(ax):
        names |= concept_names(c)
    return names


def axiom_role_names(ax: Axiom) -> FrozenSet[str]:
    names = set()
    for c in axiom_concepts(ax):
        names |= role_names(c)
    if isinstance(ax, RoleAssertion):
        names.add(role_name(ax.role))
    elif isinstance(ax, DataAssertion):
        names.add(ax.role)
    return frozenset(names)
