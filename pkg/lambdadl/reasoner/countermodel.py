from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import z3

from lambdadl.config import OracleConfig
from lambdadl.dl.axioms import (
    Axiom,
    ConceptAssertion,
    ConceptEquality,
    DataAssertion,
    ObjectEquivalence,
    RoleAssertion,
    Subsumption,
    axiom_concept_names,
    axiom_objects,
    axiom_role_names,
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
from lambdadl.dl.kb import KnowledgeBase, data_roles_of
from lambdadl.events import emit
from lambdadl.reasoner.interpretation import FiniteInterpretation, Literal


class _Encoding:
    """
    Propositional encoding of "a model of K over n elements that violates
    the goal". One Bool per concept/element, per role/pair and per
    data role/element/literal; one bounded Int per object name.
    """

    def __init__(self, kb: KnowledgeBase, goal: Axiom, n: int) -> None:
        self.n = n
        axioms = list(kb.axioms) + [goal]
        self.concepts = sorted(set(kb.signature.concepts) | axiom_concept_names(goal))
        self.data_roles = sorted(data_roles_of(axioms))
        self.roles = sorted((set(kb.signature.all_roles) | axiom_role_names(goal)) - set(self.data_roles))
        self.objects = sorted(set(kb.objects) | axiom_objects(goal))
        self.literals = _data_domain(axioms)

        E = range(n)
        self.A = {c: [z3.Bool(f"{c}@{e}") for e in E] for c in self.concepts}
        self.R = {r: [[z3.Bool(f"{r}@{e},{f}") for f in E] for e in E] for r in self.roles}
        self.D = {r: [[z3.Bool(f"{r}@{e},#{k}") for k in range(len(self.literals))] for e in E] for r in self.data_roles}
        self.O = {o: z3.Int(f"obj:{o}") for o in self.objects}
        self._memo: Dict[Tuple[ConceptExpr, int], z3.BoolRef] = {}

    def rel(self, r: RoleExpr, e: int, f: int) -> z3.BoolRef:
        name = role_name(r)
        if name not in self.R:
            return z3.BoolVal(False)
        return self.R[name][f][e] if isinstance(r, Inverse) else self.R[name][e][f]

    def holds_data(self, c: ConceptExpr, k: int) -> bool:
        v = self.literals[k]
        if isinstance(c, Datatype):
            return PrimTag.of(v) is c.prim
        if isinstance(c, Top):
            return True
        if isinstance(c, Not):
            return not self.holds_data(c.operand, k)
        if isinstance(c, And):
            return self.holds_data(c.left, k) and self.holds_data(c.right, k)
        if isinstance(c, Or):
            return self.holds_data(c.left, k) or self.holds_data(c.right, k)
        return False

    def member(self, c: ConceptExpr, e: int) -> z3.BoolRef:
        key = (c, e)
        if key not in self._memo:
            self._memo[key] = self._member(c, e)
        return self._memo[key]

    def _member(self, c: ConceptExpr, e: int) -> z3.BoolRef:
        if isinstance(c, Atomic):
            return self.A[c.name][e] if c.name in self.A else z3.BoolVal(False)
        if isinstance(c, Nominal):
            return self.O[c.object] == e
        if isinstance(c, Top):
            return z3.BoolVal(True)
        if isinstance(c, (Bottom, Datatype)):
            return z3.BoolVal(False)
        if isinstance(c, Not):
            return z3.Not(self.member(c.operand, e))
        if isinstance(c, And):
            return z3.And(self.member(c.left, e), self.member(c.right, e))
        if isinstance(c, Or):
            return z3.Or(self.member(c.left, e), self.member(c.right, e))
        if isinstance(c, (Exists, Forall)):
            name = role_name(c.role)
            if name in self.D:
                cells = [(self.D[name][e][k], self.holds_data(c.filler, k)) for k in range(len(self.literals))]
                if isinstance(c, Exists):
                    return z3.Or([cell for cell, inside in cells if inside] or [z3.BoolVal(False)])
                return z3.And([z3.Not(cell) for cell, inside in cells if not inside] or [z3.BoolVal(True)])
            if isinstance(c, Exists):
                return z3.Or([z3.And(self.rel(c.role, e, f), self.member(c.filler, f)) for f in range(self.n)])
            return z3.And([z3.Implies(self.rel(c.role, e, f), self.member(c.filler, f)) for f in range(self.n)])
        raise TypeError(f"not a concept expression: {c!r}")

    def axiom(self, ax: Axiom) -> z3.BoolRef:
        E = range(self.n)
        if isinstance(ax, Subsumption):
            return z3.And([z3.Implies(self.member(ax.lhs, e), self.member(ax.rhs, e)) for e in E])
        if isinstance(ax, ConceptEquality):
            return z3.And([self.member(ax.lhs, e) == self.member(ax.rhs, e) for e in E])
        if isinstance(ax, ConceptAssertion):
            return z3.And([z3.Implies(self.O[ax.object] == e, self.member(ax.concept, e)) for e in E])
        if isinstance(ax, RoleAssertion):
            a, b = self.O[ax.subject], self.O[ax.object]
            return z3.And([z3.Implies(z3.And(a == e, b == f), self.rel(ax.role, e, f)) for e in E for f in E])
        if isinstance(ax, DataAssertion):
            k = self.literals.index(ax.value)
            a = self.O[ax.subject]
            return z3.And([z3.Implies(a == e, self.D[ax.role][e][k]) for e in E])
        if isinstance(ax, ObjectEquivalence):
            return self.O[ax.a] == self.O[ax.b]
        raise TypeError(f"not an axiom: {ax!r}")

    def domain(self) -> List[z3.BoolRef]:
        return [z3.And(v >= 0, v < self.n) for v in self.O.values()]

    def decode(self, m: z3.ModelRef) -> FiniteInterpretation:
        E = range(self.n)

        def true(b: z3.BoolRef) -> bool:
            return z3.is_true(m.eval(b, model_completion=True))

        return FiniteInterpretation(
            universe=frozenset(E),
            concept_map={c: frozenset(e for e in E if true(self.A[c][e])) for c in self.concepts},
            role_map={r: frozenset((e, f) for e in E for f in E if true(self.R[r][e][f])) for r in self.roles},
            object_map={o: m.eval(v, model_completion=True).as_long() for o, v in self.O.items()},
            data_map={
                r: frozenset(
                    (e, self.literals[k]) for e in E for k in range(len(self.literals)) if true(self.D[r][e][k])
                )
                for r in self.data_roles
            },
            data_domain=frozenset(self.literals),
        )


def _data_domain(axioms: List[Axiom]) -> List[Literal]:
    """Asserted literals, one string nobody asserted, and both booleans."""
    strings = sorted({ax.value for ax in axioms if isinstance(ax, DataAssertion) and isinstance(ax.value, str)})
    fresh = "_"
    while fresh in strings:
        fresh += "_"
    return [*strings, fresh, False, True]


def find_countermodel(
    kb: KnowledgeBase,
    goal: Axiom,
    max_size: Optional[int] = None,
    cfg: Optional[OracleConfig] = None,
) -> Optional[FiniteInterpretation]:
    """
    Smallest interpretation (up to max_size elements) that is a model of kb
    and violates goal, or None. None is not a proof of entailment: some KBs
    only have large or infinite models.
    """
    cfg = cfg or OracleConfig.from_env()
    size = cfg.max_size if max_size is None else max_size
    if size < 1:
        raise ValueError("max_size must be positive")
    if size > cfg.max_size:
        raise ValueError(f"max_size {size} exceeds the configured bound {cfg.max_size}")

    for n in range(1, size + 1):
        enc = _Encoding(kb, goal, n)
        solver = z3.Solver()
        solver.add(*enc.domain())
        for ax in kb.axioms:
            solver.add(enc.axiom(ax))
        solver.add(z3.Not(enc.axiom(goal)))
        if solver.check() != z3.sat:
            continue
        model = enc.decode(solver.model())
        if not model.is_model_of(kb) or model.satisfies(goal):
            raise RuntimeError(f"countermodel of size {n} failed direct evaluation: {model.describe()}")
        emit("oracle.countermodel", size=n, goal=repr(goal))
        return model
    return None
