from __future__ import annotations

from typing import Optional

from lambdadl.dl.kb import KnowledgeBase
from lambdadl.reasoner.service import Reasoner, reasoner_for
from lambdadl.syntax.types import Concept, Func, ListType, Type


def is_subtype(kb: KnowledgeBase, s: Type, t: Type, reasoner: Optional[Reasoner] = None) -> bool:
    return subtype_failure(kb, s, t, reasoner) is None


def subtype_failure(kb: KnowledgeBase, s: Type, t: Type, reasoner: Optional[Reasoner] = None) -> Optional[str]:
    """
    None when S <: T; otherwise the name of the subtyping rule that could
    not be established.
    """
    if s == t:
        return None
    if isinstance(s, Concept) and isinstance(t, Concept):
        r = reasoner or reasoner_for(kb)
        return None if r.is_subsumed(s.concept, t.concept) else "S-CONCEPT"
    if isinstance(s, ListType) and isinstance(t, ListType):
        return subtype_failure(kb, s.element, t.element, reasoner)
    if isinstance(s, Func) and isinstance(t, Func):
        # contravariant domain, covariant codomain
        return subtype_failure(kb, t.domain, s.domain, reasoner) or subtype_failure(kb, s.codomain, t.codomain, reasoner)
    return "S-REFL"
