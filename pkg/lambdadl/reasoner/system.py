from __future__ import annotations

from typing import List, Protocol, Union

from lambdadl.dl.concepts import ConceptExpr, RoleExpr
from lambdadl.dl.kb import KnowledgeBase


class KnowledgeSystem(Protocol):
    """
    Backend that decides entailments over one fixed knowledge base.
    Every answer means "true in all models"; unknown is False.
    """

    kb: KnowledgeBase

    def is_consistent(self) -> bool:
        ...

    def is_satisfiable(self, c: ConceptExpr) -> bool:
        ...

    def is_subsumed(self, c: ConceptExpr, d: ConceptExpr) -> bool:
        ...

    def is_instance(self, a: str, c: ConceptExpr) -> bool:
        ...

    def are_equivalent_objects(self, a: str, b: str) -> bool:
        ...

    def entails_role(self, a: str, b: str, r: RoleExpr) -> bool:
        ...

    def data_successors(self, a: str, role: str) -> List[Union[str, bool]]:
        ...
