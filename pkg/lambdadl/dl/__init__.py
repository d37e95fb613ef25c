from lambdadl.dl.axioms import (
    Axiom,
    ConceptAssertion,
    ConceptEquality,
    DataAssertion,
    ObjectEquivalence,
    RoleAssertion,
    Subsumption,
    domain_axiom,
    range_axiom,
)
from lambdadl.dl.concepts import (
    BOTTOM,
    TOP,
    And,
    Atomic,
    AtomicRole,
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
    complement,
    conjunction,
    disjunction,
    is_nnf,
    negation_normal_form,
    role_name,
)
from lambdadl.dl.kb import EMPTY_KB, KnowledgeBase, Signature
from lambdadl.dl.parser import parse_axiom, parse_concept, parse_kb, parse_role
from lambdadl.dl.serialize import render_axiom, render_concept, render_role, serialize_kb

__all__ = [
    "Axiom",
    "ConceptAssertion",
    "ConceptEquality",
    "DataAssertion",
    "ObjectEquivalence",
    "RoleAssertion",
    "Subsumption",
    "domain_axiom",
    "range_axiom",
    "BOTTOM",
    "TOP",
    "And",
    "Atomic",
    "AtomicRole",
    "Bottom",
    "ConceptExpr",
    "Datatype",
    "Exists",
    "Forall",
    "Inverse",
    "Nominal",
    "Not",
    "Or",
    "PrimTag",
    "RoleExpr",
    "Top",
    "complement",
    "conjunction",
    "disjunction",
    "is_nnf",
    "negation_normal_form",
    "role_name",
    "EMPTY_KB",
    "KnowledgeBase",
    "Signature",
    "parse_axiom",
    "parse_concept",
    "parse_kb",
    "parse_role",
    "render_axiom",
    "render_concept",
    "render_role",
    "serialize_kb",
]
