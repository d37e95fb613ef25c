from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterator, List, Union


class PrimTag(str, Enum):
    BOOL = "bool"
    STRING = "string"

    @property
    def xsd(self) -> str:
        return "xsd:boolean" if self is PrimTag.BOOL else "xsd:string"

    @staticmethod
    def of(value: Union[str, bool]) -> "PrimTag":
        return PrimTag.BOOL if isinstance(value, bool) else PrimTag.STRING


# -------------------------
# Role expressions
# -------------------------

@dataclass(frozen=True)
class AtomicRole:
    name: str


@dataclass(frozen=True)
class Inverse:
    """
    R⁻. Inverse(Inverse(R)) collapses to R at construction.
    """
    inner: "RoleExpr"

    def __new__(cls, inner: "RoleExpr" = None):  # type: ignore[misc,assignment]
        if isinstance(inner, Inverse):
            return inner.inner
        return super().__new__(cls)


RoleExpr = Union[AtomicRole, Inverse]


def inverse(r: RoleExpr) -> RoleExpr:
    return Inverse(r)


def role_name(r: RoleExpr) -> str:
    return r.inner.name if isinstance(r, Inverse) else r.name  # type: ignore[union-attr]


def is_inverse(r: RoleExpr) -> bool:
    return isinstance(r, Inverse)


# -------------------------
# Concept expressions
# -------------------------

@dataclass(frozen=True)
class Nominal:
    object: str


@dataclass(frozen=True)
class Atomic:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Not:
    operand: "ConceptExpr"


@dataclass(frozen=True)
class And:
    left: "ConceptExpr"
    right: "ConceptExpr"


@dataclass(frozen=True)
class Or:
    left: "ConceptExpr"
    right: "ConceptExpr"


@dataclass(frozen=True)
class Exists:
    role: RoleExpr
    filler: "ConceptExpr"


@dataclass(frozen=True)
class Forall:
    role: RoleExpr
    filler: "ConceptExpr"


@dataclass(frozen=True)
class Datatype:
    prim: PrimTag


ConceptExpr = Union[Nominal, Atomic, Top, Bottom, Not, And, Or, Exists, Forall, Datatype]

TOP = Top()
BOTTOM = Bottom()


def conjunction(parts: List[ConceptExpr]) -> ConceptExpr:
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disjunction(parts: List[ConceptExpr]) -> ConceptExpr:
    if not parts:
        return BOTTOM
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def subconcepts(c: ConceptExpr) -> Iterator[ConceptExpr]:
    yield c
    if isinstance(c, Not):
        yield from subconcepts(c.operand)
    elif isinstance(c, (And, Or)):
        yield from subconcepts(c.left)
        yield from subconcepts(c.right)
    elif isinstance(c, (Exists, Forall)):
        yield from subconcepts(c.filler)


def concept_names(c: ConceptExpr) -> FrozenSet[str]:
    return frozenset(s.name for s in subconcepts(c) if isinstance(s, Atomic))


def nominal_names(c: ConceptExpr) -> FrozenSet[str]:
    return frozenset(s.object for s in subconcepts(c) if isinstance(s, Nominal))


def role_names(c: ConceptExpr) -> FrozenSet[str]:
    return frozenset(role_name(s.role) for s in subconcepts(c) if isinstance(s, (Exists, Forall)))


def is_data_range(c: ConceptExpr) -> bool:
    """
    Filler allowed under a data role: datatypes, ⊤, ⊥ and boolean
    combinations of those.
    """
    if isinstance(c, (Datatype, Top, Bottom)):
        return True
    if isinstance(c, Not):
        return is_data_range(c.operand)
    if isinstance(c, (And, Or)):
        return is_data_range(c.left) and is_data_range(c.right)
    return False


def mentions_datatype(c: ConceptExpr) -> bool:
    return any(isinstance(s, Datatype) for s in subconcepts(c))


# -------------------------
# Negation normal form
# -------------------------

def negation_normal_form(c: ConceptExpr) -> ConceptExpr:
    if isinstance(c, (Nominal, Atomic, Top, Bottom, Datatype)):
        return c
    if isinstance(c, And):
        return And(negation_normal_form(c.left), negation_normal_form(c.right))
    if isinstance(c, Or):
        return Or(negation_normal_form(c.left), negation_normal_form(c.right))
    if isinstance(c, Exists):
        return Exists(c.role, negation_normal_form(c.filler))
    if isinstance(c, Forall):
        return Forall(c.role, negation_normal_form(c.filler))
    if isinstance(c, Not):
        return _negated(c.operand)
    raise TypeError(f"not a concept expression: {c!r}")


def _negated(c: ConceptExpr) -> ConceptExpr:
    if isinstance(c, (Nominal, Atomic, Datatype)):
        return Not(c)
    if isinstance(c, Top):
        return BOTTOM
    if isinstance(c, Bottom):
        return TOP
    if isinstance(c, Not):
        return negation_normal_form(c.operand)
    if isinstance(c, And):
        return Or(_negated(c.left), _negated(c.right))
    if isinstance(c, Or):
        return And(_negated(c.left), _negated(c.right))
    if isinstance(c, Exists):
        return Forall(c.role, _negated(c.filler))
    if isinstance(c, Forall):
        return Exists(c.role, _negated(c.filler))
    raise TypeError(f"not a concept expression: {c!r}")


def complement(c: ConceptExpr) -> ConceptExpr:
    """NNF of ¬c."""
    return _negated(c)


def is_nnf(c: ConceptExpr) -> bool:
    for s in subconcepts(c):
        if isinstance(s, Not) and not isinstance(s.operand, (Atomic, Nominal, Datatype)):
            return False
    return True
