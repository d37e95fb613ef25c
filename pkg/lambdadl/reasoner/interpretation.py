from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Tuple, Union

from lambdadl.dl.axioms import (
    Axiom,
    ConceptAssertion,
    ConceptEquality,
    DataAssertion,
    ObjectEquivalence,
    RoleAssertion,
    Subsumption,
)
from lambdadl.dl.concepts import (
    And,
    Atomic,
    Bottom,
    ConceptExpr,
    Datatype,
    Exists,
    Forall,
    Inverse,
    Nominal,
    Not,
    Or,
    PrimTag,
    RoleExpr,
    Top,
    role_name,
)
from lambdadl.dl.kb import KnowledgeBase

Literal = Union[str, bool]
Pair = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class FiniteInterpretation:
    """
    Explicit (Δ, ·^I). Object elements are ints; data roles relate elements
    to literal values drawn from data_domain. Two object names may share an
    element.
    """
    universe: FrozenSet[int]
    concept_map: Mapping[str, FrozenSet[int]] = field(default_factory=dict)
    role_map: Mapping[str, FrozenSet[Pair]] = field(default_factory=dict)
    object_map: Mapping[str, int] = field(default_factory=dict)
    data_map: Mapping[str, FrozenSet[Tuple[int, Literal]]] = field(default_factory=dict)
    data_domain: FrozenSet[Literal] = frozenset({True, False})

    @property
    def data_roles(self) -> FrozenSet[str]:
        return frozenset(self.data_map)

    def role_pairs(self, r: RoleExpr) -> FrozenSet[Pair]:
        pairs = self.role_map.get(role_name(r), frozenset())
        if isinstance(r, Inverse):
            return frozenset((b, a) for a, b in pairs)
        return pairs

    def data_extension(self, c: ConceptExpr) -> FrozenSet[Literal]:
        if isinstance(c, Datatype):
            return frozenset(v for v in self.data_domain if PrimTag.of(v) is c.prim)
        if isinstance(c, Top):
            return self.data_domain
        if isinstance(c, Not):
            return self.data_domain - self.data_extension(c.operand)
        if isinstance(c, And):
            return self.data_extension(c.left) & self.data_extension(c.right)
        if isinstance(c, Or):
            return self.data_extension(c.left) | self.data_extension(c.right)
        return frozenset()

    def extension(self, c: ConceptExpr) -> FrozenSet[int]:
        if isinstance(c, Atomic):
            return frozenset(self.concept_map.get(c.name, frozenset()))
        if isinstance(c, Nominal):
            e = self.object_map.get(c.object)
            return frozenset() if e is None else frozenset({e})
        if isinstance(c, Top):
            return self.universe
        if isinstance(c, (Bottom, Datatype)):
            return frozenset()
        if isinstance(c, Not):
            return self.universe - self.extension(c.operand)
        if isinstance(c, And):
            return self.extension(c.left) & self.extension(c.right)
        if isinstance(c, Or):
            return self.extension(c.left) | self.extension(c.right)
        if isinstance(c, (Exists, Forall)):
            succ = self._successors(c.role, c.filler)
            if isinstance(c, Exists):
                return frozenset(x for x in self.universe if succ[x][1])
            return frozenset(x for x in self.universe if succ[x][0] == succ[x][1])
        raise TypeError(f"not a concept expression: {c!r}")

    def _successors(self, r: RoleExpr, filler: ConceptExpr) -> Dict[int, Tuple[int, int]]:
        """element -> (number of R-successors, number of those in the filler)"""
        counts = {x: (0, 0) for x in self.universe}
        name = role_name(r)
        if name in self.data_map and not isinstance(r, Inverse):
            inside = self.data_extension(filler)
            for x, v in self.data_map[name]:
                total, hit = counts[x]
                counts[x] = (total + 1, hit + (v in inside))
            return counts
        inside_objects = self.extension(filler)
        for x, y in self.role_pairs(r):
            total, hit = counts[x]
            counts[x] = (total + 1, hit + (y in inside_objects))
        return counts

    def satisfies(self, ax: Axiom) -> bool:
        if isinstance(ax, Subsumption):
            return self.extension(ax.lhs) <= self.extension(ax.rhs)
        if isinstance(ax, ConceptEquality):
            return self.extension(ax.lhs) == self.extension(ax.rhs)
        if isinstance(ax, ConceptAssertion):
            return self.object_map.get(ax.object) in self.extension(ax.concept)
        if isinstance(ax, RoleAssertion):
            pair = (self.object_map.get(ax.subject), self.object_map.get(ax.object))
            return pair in self.role_pairs(ax.role)
        if isinstance(ax, DataAssertion):
            return (self.object_map.get(ax.subject), ax.value) in self.data_map.get(ax.role, frozenset())
        if isinstance(ax, ObjectEquivalence):
            a, b = self.object_map.get(ax.a), self.object_map.get(ax.b)
            return a is not None and a == b
        raise TypeError(f"not an axiom: {ax!r}")

    def is_model_of(self, kb: KnowledgeBase) -> bool:
        if not self.universe:
            return False
        if any(o not in self.object_map for o in kb.objects):
            return False
        return all(self.satisfies(ax) for ax in kb.axioms)

    def describe(self) -> dict:
        return {
            "universe": sorted(self.universe),
            "objects": dict(sorted(self.object_map.items())),
            "concepts": {k: sorted(v) for k, v in sorted(self.concept_map.items()) if v},
            "roles": {k: sorted(v) for k, v in sorted(self.role_map.items()) if v},
            "data": {k: sorted(v, key=repr) for k, v in sorted(self.data_map.items()) if v},
        }
