from __future__ import annotations

from typing import Optional

from lambdadl.dl.concepts import ConceptExpr, Inverse, RoleExpr, role_name
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.errors import EvaluationError
from lambdadl.reasoner.service import Reasoner, reasoner_for
from lambdadl.syntax.terms import Object, PrimV, Value, list_value
from lambdadl.syntax.types import Type


def materialize_query(kb: KnowledgeBase, c: ConceptExpr, element_type: Type, reasoner: Optional[Reasoner] = None) -> Value:
    """
    The named instances of C as a list value, in the reasoner's order. The
    closing nil carries element_type.
    """
    r = reasoner or reasoner_for(kb)
    return list_value([Object(a) for a in r.query_instances(c)], element_type)


def materialize_projection(
    kb: KnowledgeBase,
    a: str,
    role: RoleExpr,
    element_type: Type,
    reasoner: Optional[Reasoner] = None,
) -> Value:
    r = reasoner or reasoner_for(kb)
    name = role_name(role)
    if kb.is_data_role(name):
        if isinstance(role, Inverse):
            raise EvaluationError(f"data role {name} has no inverse")
        return list_value([PrimV(v) for v in r.query_data_successors(a, name)], element_type)
    return list_value([Object(b) for b in r.query_role_successors(a, role)], element_type)
