from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from lambdadl.config import BudgetConfig
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
    ConceptExpr,
    Forall,
    Inverse,
    Nominal,
    Not,
    RoleExpr,
    negation_normal_form,
    nominal_names,
    role_name,
)
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.serialize import render_concept, render_role
from lambdadl.errors import SemanticError
from lambdadl.reasoner.budget import ResourceBudget
from lambdadl.reasoner.cache import EntailmentCache
from lambdadl.reasoner.system import KnowledgeSystem
from lambdadl.reasoner.tableau import BLOCKABLE, TBoxIndex, Tableau, build_graph

Literal = Union[str, bool]


def _oriented(subject: str, obj: str, r: RoleExpr) -> Tuple[str, str, str]:
    """(a,b):R⁻ is (b,a):R."""
    if isinstance(r, Inverse):
        return obj, subject, role_name(r)
    return subject, obj, role_name(r)


def _literal_order(v: Literal) -> Tuple[int, str]:
    return (0, str(v).lower()) if isinstance(v, bool) else (1, v)


class TableauReasoner:
    """
    Built-in KnowledgeSystem. Every question is reduced to the consistency
    of the KB plus a few extra facts:
    - C satisfiable        : a fresh node labelled C
    - K ⊨ a : C            : a : !C is inconsistent
    - K ⊨ a == b           : a : !{b} is inconsistent
    - K ⊨ (a,b) : R        : a : forall R.!{b} is inconsistent
    """

    def __init__(self, kb: KnowledgeBase, budget: Optional[BudgetConfig] = None) -> None:
        self.kb = kb
        self.budget = budget or BudgetConfig()
        self.index = TBoxIndex.build(kb)
        self._asserted_pairs = frozenset(
            _oriented(ax.subject, ax.object, ax.role) for ax in kb.abox if isinstance(ax, RoleAssertion)
        )

    def _open(
        self,
        question: str,
        extra_objects: Iterable[str] = (),
        assertions: Sequence[Tuple[str, ConceptExpr]] = (),
        root: Optional[ConceptExpr] = None,
    ) -> bool:
        budget = ResourceBudget(self.budget, question)
        g = build_graph(self.kb, self.index, budget, extra_objects, assertions)
        if root is not None:
            g.new_node(BLOCKABLE, [negation_normal_form(root)])
        return Tableau(budget).satisfiable(g)

    def is_consistent(self) -> bool:
        return self._open("consistency")

    def is_satisfiable(self, c: ConceptExpr) -> bool:
        return self._open(f"satisfiability of {render_concept(c)}", nominal_names(c), root=c)

    def is_subsumed(self, c: ConceptExpr, d: ConceptExpr) -> bool:
        if c == d:
            return True
        return not self.is_satisfiable(And(c, Not(d)))

    def is_instance(self, a: str, c: ConceptExpr) -> bool:
        return not self._open(
            f"{a} : {render_concept(c)}",
            nominal_names(c),
            assertions=[(a, Not(c))],
        )

    def are_equivalent_objects(self, a: str, b: str) -> bool:
        if a == b:
            return True
        return not self._open(f"{a} == {b}", (a, b), assertions=[(a, Not(Nominal(b)))])

    def entails_role(self, a: str, b: str, r: RoleExpr) -> bool:
        if _oriented(a, b, r) in self._asserted_pairs:
            return True
        return not self._open(
            f"({a}, {b}) : {render_role(r)}",
            (a, b),
            assertions=[(a, Forall(r, Not(Nominal(b))))],
        )

    def data_successors(self, a: str, role: str) -> List[Literal]:
        values = {ax.value for ax in self.kb.abox if isinstance(ax, DataAssertion) and ax.subject == a and ax.role == role}
        return sorted(values, key=_literal_order)


class Reasoner:
    """
    Cached entailment front end over a KnowledgeSystem, plus the DL-safe
    query operations. Query answers are named objects only, sorted by name.
    """

    def __init__(self, system: KnowledgeSystem, cache: Optional[EntailmentCache] = None) -> None:
        self.system = system
        self.cache = cache or EntailmentCache()

    @property
    def kb(self) -> KnowledgeBase:
        return self.system.kb

    def is_consistent(self) -> bool:
        return self.cache.get_or_compute(("consistent",), self.system.is_consistent)

    def is_satisfiable(self, c: ConceptExpr) -> bool:
        key = ("sat", negation_normal_form(c))
        return self.cache.get_or_compute(key, lambda: self.system.is_satisfiable(c))

    def is_subsumed(self, c: ConceptExpr, d: ConceptExpr) -> bool:
        key = ("sub", negation_normal_form(c), negation_normal_form(d))
        return self.cache.get_or_compute(key, lambda: self.system.is_subsumed(c, d))

    def is_instance(self, a: str, c: ConceptExpr) -> bool:
        key = ("inst", a, negation_normal_form(c))
        return self.cache.get_or_compute(key, lambda: self.system.is_instance(a, c))

    def are_equivalent_objects(self, a: str, b: str) -> bool:
        key = ("same", min(a, b), max(a, b))
        return self.cache.get_or_compute(key, lambda: self.system.are_equivalent_objects(a, b))

    def entails_role(self, a: str, b: str, r: RoleExpr) -> bool:
        key = ("role",) + _oriented(a, b, r)
        return self.cache.get_or_compute(key, lambda: self.system.entails_role(a, b, r))

    def query_instances(self, c: ConceptExpr) -> List[str]:
        if self.is_consistent() and not self.is_satisfiable(c):
            return []
        return [a for a in sorted(self.kb.objects) if self.is_instance(a, c)]

    def query_role_successors(self, a: str, r: RoleExpr) -> List[str]:
        if self.kb.is_data_role(role_name(r)):
            raise SemanticError(f"{render_role(r)} is a data role")
        return [b for b in sorted(self.kb.objects) if self.entails_role(a, b, r)]

    def query_data_successors(self, a: str, role: str) -> List[Literal]:
        if role in self.kb.signature.roles:
            raise SemanticError(f"{role} is an object role")
        return self.system.data_successors(a, role)

    def entails(self, ax: Axiom) -> bool:
        """K ⊨ ax for a single axiom of any kind."""
        if isinstance(ax, Subsumption):
            return self.is_subsumed(ax.lhs, ax.rhs)
        if isinstance(ax, ConceptEquality):
            return self.is_subsumed(ax.lhs, ax.rhs) and self.is_subsumed(ax.rhs, ax.lhs)
        if isinstance(ax, ConceptAssertion):
            return self.is_instance(ax.object, ax.concept)
        if isinstance(ax, RoleAssertion):
            return self.entails_role(ax.subject, ax.object, ax.role)
        if isinstance(ax, ObjectEquivalence):
            return self.are_equivalent_objects(ax.a, ax.b)
        if isinstance(ax, DataAssertion):
            if not self.is_consistent():
                return True
            if not self.kb.is_data_role(ax.role):
                return False
            return any(type(v) is type(ax.value) and v == ax.value for v in self.system.data_successors(ax.subject, ax.role))
        raise TypeError(f"not an axiom: {ax!r}")

    def snapshot(self) -> dict:
        return {"kb": self.kb.fingerprint(), "cache": self.cache.snapshot()}


# -------------------------
# Shared per-KB reasoners
# -------------------------

_KEEP = 32
_registry: "OrderedDict[Tuple[KnowledgeBase, BudgetConfig], Reasoner]" = OrderedDict()
_registry_lock = threading.Lock()


def reasoner_for(kb: KnowledgeBase, budget: Optional[BudgetConfig] = None) -> Reasoner:
    """
    One cached Reasoner per (KB, budget), so the checker, the evaluator and
    the front ends share answers.
    """
    budget = budget or BudgetConfig.from_env()
    key = (kb, budget)
    with _registry_lock:
        r = _registry.get(key)
        if r is None:
            r = Reasoner(TableauReasoner(kb, budget))
            _registry[key] = r
            while len(_registry) > _KEEP:
                _registry.popitem(last=False)
        else:
            _registry.move_to_end(key)
        return r


def reset_reasoners() -> None:
    with _registry_lock:
        _registry.clear()


def is_consistent(kb: KnowledgeBase) -> bool:
    return reasoner_for(kb).is_consistent()


def is_satisfiable(kb: KnowledgeBase, c: ConceptExpr) -> bool:
    return reasoner_for(kb).is_satisfiable(c)


def is_subsumed(kb: KnowledgeBase, c: ConceptExpr, d: ConceptExpr) -> bool:
    return reasoner_for(kb).is_subsumed(c, d)


def is_instance(kb: KnowledgeBase, a: str, c: ConceptExpr) -> bool:
    return reasoner_for(kb).is_instance(a, c)


def are_equivalent_objects(kb: KnowledgeBase, a: str, b: str) -> bool:
    return reasoner_for(kb).are_equivalent_objects(a, b)


def entails_role(kb: KnowledgeBase, a: str, b: str, r: RoleExpr) -> bool:
    return reasoner_for(kb).entails_role(a, b, r)


def query_instances(kb: KnowledgeBase, c: ConceptExpr) -> List[str]:
    return reasoner_for(kb).query_instances(c)


def query_role_successors(kb: KnowledgeBase, a: str, r: RoleExpr) -> List[str]:
    return reasoner_for(kb).query_role_successors(a, r)


def query_data_successors(kb: KnowledgeBase, a: str, role: str) -> List[Literal]:
    return reasoner_for(kb).query_data_successors(a, role)


def entails(kb: KnowledgeBase, ax: Axiom) -> bool:
    return reasoner_for(kb).entails(ax)
