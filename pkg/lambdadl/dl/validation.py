from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Protocol, Sequence

from lambdadl.dl.axioms import (
    ASSERTIONAL,
    TERMINOLOGICAL,
    Axiom,
    DataAssertion,
    RoleAssertion,
    axiom_concept_names,
    axiom_concepts,
    axiom_objects,
    axiom_role_names,
)
from lambdadl.dl.concepts import (
    And,
    ConceptExpr,
    Datatype,
    Exists,
    Forall,
    Not,
    Or,
    is_data_range,
    is_inverse,
    role_name,
    subconcepts,
)
from lambdadl.errors import SemanticError


@dataclass
class RuleResult:
    ok: bool
    rule_id: str
    reason: str
    violations: List[str]
    debug: Dict[str, Any]


class KBRule(Protocol):
    rule_id: str

    def evaluate(self, axioms: Sequence[Axiom]) -> RuleResult:
        ...


def _ok(rule_id: str, reason: str = "ok", debug: Optional[Dict[str, Any]] = None) -> RuleResult:
    return RuleResult(ok=True, rule_id=rule_id, reason=reason, violations=[], debug=debug or {})


def _fail(rule_id: str, reason: str, violations: List[str], debug: Optional[Dict[str, Any]] = None) -> RuleResult:
    return RuleResult(ok=False, rule_id=rule_id, reason=reason, violations=violations, debug=debug or {})


def _data_roles(axioms: Sequence[Axiom]) -> set:
    from lambdadl.dl.kb import data_roles_of

    return set(data_roles_of(axioms))


class NameKindsRule:
    """
    Concept, role and object names live in disjoint namespaces.
    """
    rule_id = "kb.name_kinds"

    def evaluate(self, axioms: Sequence[Axiom]) -> RuleResult:
        concepts, roles, objects = set(), set(), set()
        for ax in axioms:
            concepts |= axiom_concept_names(ax)
            roles |= axiom_role_names(ax)
            objects |= axiom_objects(ax)

        bad = []
        for name in sorted(concepts & roles):
            bad.append(f"{name}: concept and role")
        for name in sorted(concepts & objects):
            bad.append(f"{name}: concept and object")
        for name in sorted(roles & objects):
            bad.append(f"{name}: role and object")
        if bad:
            return _fail(self.rule_id, "name used with more than one kind", bad)
        return _ok(self.rule_id, "name kinds ok", {"names": len(concepts | roles | objects)})


class DataRoleUsageRule:
    rule_id = "kb.data_role_usage"

    def evaluate(self, axioms: Sequence[Axiom]) -> RuleResult:
        data = _data_roles(axioms)
        if not data:
            return _ok(self.rule_id, "no data roles")

        bad = []
        for ax in axioms:
            if isinstance(ax, RoleAssertion) and role_name(ax.role) in data:
                bad.append(f"{role_name(ax.role)}: data role used between objects")
            for c in axiom_concepts(ax):
                for s in subconcepts(c):
                    if not isinstance(s, (Exists, Forall)) or role_name(s.role) not in data:
                        continue
                    if is_inverse(s.role):
                        bad.append(f"{role_name(s.role)}: data role cannot be inverted")
                    elif not is_data_range(s.filler):
                        bad.append(f"{role_name(s.role)}: data role with an object filler")
        if bad:
            return _fail(self.rule_id, "data role used as object role", sorted(set(bad)))
        return _ok(self.rule_id, "data roles ok", {"data_roles": sorted(data)})


class DatatypePlacementRule:
    """
    Datatype leaves may only sit inside the filler of a quantifier over a
    data role.
    """
    rule_id = "kb.datatype_placement"

    def evaluate(self, axioms: Sequence[Axiom]) -> RuleResult:
        bad = []
        for ax in axioms:
            for c in axiom_concepts(ax):
                stray = _stray_datatypes(c)
                if stray:
                    bad.append(f"{stray[0].prim.xsd} outside a data role filler")
        if bad:
            return _fail(self.rule_id, "misplaced datatype", sorted(set(bad)))
        return _ok(self.rule_id, "datatype placement ok")


def _stray_datatypes(c: ConceptExpr) -> List[Datatype]:
    if isinstance(c, Datatype):
        return [c]
    if isinstance(c, Not):
        return _stray_datatypes(c.operand)
    if isinstance(c, (And, Or)):
        return _stray_datatypes(c.left) + _stray_datatypes(c.right)
    if isinstance(c, (Exists, Forall)):
        if is_data_range(c.filler):
            return []
        return _stray_datatypes(c.filler)
    return []


class AxiomPartitionRule:
    rule_id = "kb.axiom_partition"

    def evaluate(self, axioms: Sequence[Axiom]) -> RuleResult:
        bad = [repr(ax) for ax in axioms if not isinstance(ax, TERMINOLOGICAL + ASSERTIONAL)]
        if bad:
            return _fail(self.rule_id, "not an axiom", bad)
        dangling = [ax for ax in axioms if isinstance(ax, DataAssertion) and not isinstance(ax.value, (str, bool))]
        if dangling:
            return _fail(self.rule_id, "literal must be a string or boolean", [repr(ax) for ax in dangling])
        return _ok(self.rule_id, "axiom partition ok")


@dataclass
class ValidationReport:
    ok: bool
    reason: str
    violations: List[str]
    rule_results: List[RuleResult]


def default_rules() -> List[KBRule]:
    return [
        AxiomPartitionRule(),
        NameKindsRule(),
        DataRoleUsageRule(),
        DatatypePlacementRule(),
    ]


class KBValidator:
    def __init__(self, rules: Optional[List[KBRule]] = None) -> None:
        self.rules = rules or default_rules()

    def verify(self, axioms: Sequence[Axiom]) -> ValidationReport:
        results: List[RuleResult] = []
        violations: List[str] = []
        for rule in self.rules:
            rr = rule.evaluate(axioms)
            results.append(rr)
            if not rr.ok:
                violations.extend(f"{rr.rule_id}: {v}" for v in rr.violations)
        ok = not violations
        return ValidationReport(
            ok=ok,
            reason="ok" if ok else "knowledge base rejected",
            violations=violations,
            rule_results=results,
        )


def validate_axioms(axioms: Sequence[Axiom]) -> ValidationReport:
    report = KBValidator().verify(axioms)
    if not report.ok:
        raise SemanticError(report.reason, report.violations)
    return report
