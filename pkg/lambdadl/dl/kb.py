from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Tuple

from lambdadl.dl.axioms import (
    Axiom,
    ConceptAssertion,
    DataAssertion,
    RoleAssertion,
    Subsumption,
    axiom_concept_names,
    axiom_concepts,
    axiom_objects,
    axiom_role_names,
    expand,
    is_terminological,
)
from lambdadl.dl.concepts import (
    Datatype,
    Exists,
    Forall,
    PrimTag,
    Top,
    is_data_range,
    mentions_datatype,
    role_name,
    subconcepts,
)


@dataclass(frozen=True)
class Signature:
    concepts: FrozenSet[str] = frozenset()
    roles: FrozenSet[str] = frozenset()
    objects: FrozenSet[str] = frozenset()
    data_roles: FrozenSet[str] = frozenset()

    @property
    def all_roles(self) -> FrozenSet[str]:
        return self.roles | self.data_roles

    def is_empty(self) -> bool:
        return not (self.concepts or self.roles or self.objects or self.data_roles)

    @staticmethod
    def of(axioms: Iterable[Axiom]) -> "Signature":
        axioms = list(axioms)
        concepts, roles, objects = set(), set(), set()
        for ax in axioms:
            concepts |= axiom_concept_names(ax)
            roles |= axiom_role_names(ax)
            objects |= axiom_objects(ax)
        data = data_roles_of(axioms)
        return Signature(
            concepts=frozenset(concepts),
            roles=frozenset(roles - data),
            objects=frozenset(objects),
            data_roles=frozenset(data),
        )


def data_roles_of(axioms: Iterable[Axiom]) -> FrozenSet[str]:
    """
    A role is a data role when it carries a literal assertion or a datatype
    filler somewhere.
    """
    out = set()
    for ax in axioms:
        if isinstance(ax, DataAssertion):
            out.add(ax.role)
        for c in axiom_concepts(ax):
            for s in subconcepts(c):
                if isinstance(s, (Exists, Forall)) and is_data_range(s.filler) and mentions_datatype(s.filler):
                    out.add(role_name(s.role))
    return frozenset(out)


@dataclass(frozen=True, eq=False)
class KnowledgeBase:
    """
    K = (T, A) over its signature. Immutable; equality is on the signature
    and the axiom multisets, not on source order.
    """
    signature: Signature = field(default_factory=Signature)
    tbox: Tuple[Axiom, ...] = ()
    abox: Tuple[Axiom, ...] = ()

    @staticmethod
    def from_axioms(axioms: Iterable[Axiom]) -> "KnowledgeBase":
        """
        Build and validate a KB. ConceptEquality is stored as two
        subsumptions.
        """
        from lambdadl.dl.validation import validate_axioms

        flat = [e for ax in axioms for e in expand(ax)]
        validate_axioms(flat)
        return KnowledgeBase(
            signature=Signature.of(flat),
            tbox=tuple(ax for ax in flat if is_terminological(ax)),
            abox=tuple(ax for ax in flat if not is_terminological(ax)),
        )

    @property
    def axioms(self) -> Tuple[Axiom, ...]:
        return self.tbox + self.abox

    @property
    def objects(self) -> FrozenSet[str]:
        return self.signature.objects

    def is_data_role(self, name: str) -> bool:
        return name in self.signature.data_roles

    def is_object_role(self, name: str) -> bool:
        return name in self.signature.roles

    def data_range(self, role: str) -> Optional[PrimTag]:
        """
        Datatype of a data role: from a `Top sub forall R.<datatype>` axiom,
        else from the asserted literals when they agree.
        """
        for ax in self.tbox:
            if (
                isinstance(ax, Subsumption)
                and isinstance(ax.lhs, Top)
                and isinstance(ax.rhs, Forall)
                and role_name(ax.rhs.role) == role
                and isinstance(ax.rhs.filler, Datatype)
            ):
                return ax.rhs.filler.prim
        tags = {PrimTag.of(ax.value) for ax in self.abox if isinstance(ax, DataAssertion) and ax.role == role}
        if len(tags) == 1:
            return tags.pop()
        return None

    def role_assertions(self) -> Tuple[RoleAssertion, ...]:
        return tuple(ax for ax in self.abox if isinstance(ax, RoleAssertion))

    def concept_assertions(self) -> Tuple[ConceptAssertion, ...]:
        return tuple(ax for ax in self.abox if isinstance(ax, ConceptAssertion))

    def data_assertions(self) -> Tuple[DataAssertion, ...]:
        return tuple(ax for ax in self.abox if isinstance(ax, DataAssertion))

    def extended(self, axioms: Iterable[Axiom]) -> "KnowledgeBase":
        return KnowledgeBase.from_axioms(list(self.axioms) + list(axioms))

    @cached_property
    def _key(self) -> tuple:
        return (
            self.signature,
            frozenset(Counter(self.tbox).items()),
            frozenset(Counter(self.abox).items()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def fingerprint(self) -> str:
        from lambdadl.dl.serialize import serialize_kb

        return hashlib.sha256(serialize_kb(self).encode("utf-8")).hexdigest()[:12]

    def summary(self) -> dict:
        sig = self.signature
        return {
            "fingerprint": self.fingerprint(),
            "concepts": len(sig.concepts),
            "roles": len(sig.roles),
            "data_roles": len(sig.data_roles),
            "objects": len(sig.objects),
            "tbox": len(self.tbox),
            "abox": len(self.abox),
        }


EMPTY_KB = KnowledgeBase()
