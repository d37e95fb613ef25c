from lambdadl.reasoner.budget import ResourceBudget
from lambdadl.reasoner.cache import EntailmentCache
from lambdadl.reasoner.countermodel import find_countermodel
from lambdadl.reasoner.interpretation import FiniteInterpretation
from lambdadl.reasoner.service import (
    Reasoner,
    TableauReasoner,
    are_equivalent_objects,
    entails,
    entails_role,
    is_consistent,
    is_instance,
    is_satisfiable,
    is_subsumed,
    query_data_successors,
    query_instances,
    query_role_successors,
    reasoner_for,
    reset_reasoners,
)
from lambdadl.reasoner.system import KnowledgeSystem

__all__ = [
    "EntailmentCache",
    "FiniteInterpretation",
    "KnowledgeSystem",
    "Reasoner",
    "ResourceBudget",
    "TableauReasoner",
    "are_equivalent_objects",
    "entails",
    "entails_role",
    "find_countermodel",
    "is_consistent",
    "is_instance",
    "is_satisfiable",
    "is_subsumed",
    "query_data_successors",
    "query_instances",
    "query_role_successors",
    "reasoner_for",
    "reset_reasoners",
]
