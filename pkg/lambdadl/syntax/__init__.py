from lambdadl.syntax.parser import parse_repl_line, parse_term, parse_type
from lambdadl.syntax.printer import pretty_print, show_type, show_value
from lambdadl.syntax.subst import alpha_equivalent, free_variables, is_closed, substitute
from lambdadl.syntax.terms import (
    FALSE,
    TRUE,
    App,
    Case,
    CaseArm,
    Closure,
    Cons,
    ConsV,
    Eq,
    Fix,
    Head,
    If,
    Let,
    Lit,
    Nil,
    Null,
    Object,
    PrimV,
    Proj,
    Query,
    Tail,
    Term,
    Value,
    Var,
    as_value,
    is_value,
)
from lambdadl.syntax.types import BOOL, STRING, Concept, Func, ListType, Prim, Type

__all__ = [
    "parse_repl_line",
    "parse_term",
    "parse_type",
    "pretty_print",
    "show_type",
    "show_value",
    "alpha_equivalent",
    "free_variables",
    "is_closed",
    "substitute",
    "FALSE",
    "TRUE",
    "App",
    "Case",
    "CaseArm",
    "Closure",
    "Cons",
    "ConsV",
    "Eq",
    "Fix",
    "Head",
    "If",
    "Let",
    "Lit",
    "Nil",
    "Null",
    "Object",
    "PrimV",
    "Proj",
    "Query",
    "Tail",
    "Term",
    "Value",
    "Var",
    "as_value",
    "is_value",
    "BOOL",
    "STRING",
    "Concept",
    "Func",
    "ListType",
    "Prim",
    "Type",
]
