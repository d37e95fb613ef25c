from __future__ import annotations

from typing import Union

from lambdadl.dl.concepts import PrimTag
from lambdadl.dl.lexer import escape
from lambdadl.dl.serialize import is_atomic_concept, render_concept, render_role
from lambdadl.syntax.subst import rename_from_objects
from lambdadl.syntax.terms import (
    App,
    Case,
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
)
from lambdadl.syntax.types import Concept, Func, ListType, Prim, Type

# Precedence contexts: a whole term, an operand of '=', the function of an
# application, an argument (atom or projection chain).
TERM, EQ, APP, ARG = 0, 1, 2, 3

_TYPES = (Concept, Func, ListType, Prim)
_VALUES = (Object, Nil, ConsV, Closure, PrimV)


def show_type(t: Type, unicode: bool = False) -> str:
    if isinstance(t, Prim):
        return "bool" if t.tag is PrimTag.BOOL else "string"
    if isinstance(t, Concept):
        return render_concept(t.concept, unicode)
    if isinstance(t, ListType):
        el = show_type(t.element, unicode)
        if isinstance(t.element, Func) or (isinstance(t.element, Concept) and not is_atomic_concept(t.element.concept)):
            el = f"({el})"
        return f"{el} list"
    if isinstance(t, Func):
        dom = show_type(t.domain, unicode)
        if isinstance(t.domain, Func):
            dom = f"({dom})"
        arrow = " → " if unicode else " -> "
        return dom + arrow + show_type(t.codomain, unicode)
    raise TypeError(f"not a type: {t!r}")


def _paren(s: str, wrap: bool) -> str:
    return f"({s})" if wrap else s


class _Printer:
    def __init__(self, unicode: bool = False, annotate_nil: bool = True) -> None:
        self.unicode = unicode
        self.annotate_nil = annotate_nil

    def type_(self, t: Type) -> str:
        return show_type(t, self.unicode)

    def value(self, v: Value, level: int, bar: bool) -> str:
        if isinstance(v, Object):
            return v.name
        if isinstance(v, PrimV):
            if isinstance(v.value, bool):
                return "true" if v.value else "false"
            return escape(v.value)
        if isinstance(v, Nil):
            return f"nil[{self.type_(v.annot)}]" if self.annotate_nil else "nil"
        if isinstance(v, ConsV):
            s = f"cons {self.value(v.head, ARG, False)} {self.value(v.tail, ARG, False)}"
            return _paren(s, level > APP)
        if isinstance(v, Closure):
            lam = "λ" if self.unicode else "fun"
            x, body = rename_from_objects(v.param, v.body)
            s = f"{lam}({x}:{self.type_(v.annot)}). {self.term(body, TERM, bar)}"
            return _paren(s, level > TERM)
        raise TypeError(f"not a value: {v!r}")

    def term(self, t: Term, level: int, bar: bool = False) -> str:
        """
        `bar` is set when a '|' may follow (inside a case arm); trailing
        queries and cases must then be closed off.
        """
        if isinstance(t, Var):
            return t.name
        if isinstance(t, Lit):
            return self.value(t.value, level, bar)
        if isinstance(t, Let):
            x, body = rename_from_objects(t.name, t.body)
            s = f"let {x} = {self.term(t.bound, TERM)} in {self.term(body, TERM, bar)}"
            return _paren(s, level > TERM)
        if isinstance(t, If):
            s = (
                f"if {self.term(t.cond, TERM)} then {self.term(t.then, TERM)} "
                f"else {self.term(t.else_, TERM, bar)}"
            )
            return _paren(s, level > TERM)
        if isinstance(t, Case):
            parts = [f"case {self.term(t.scrutinee, TERM)} of"]
            for arm in t.arms:
                c = render_concept(arm.concept, self.unicode)
                x, body = rename_from_objects(arm.binder, arm.body)
                parts.append(f"| type {c} as {x} -> {self.term(body, TERM, True)}")
            parts.append(f"| default {self.term(t.default, TERM, bar)}")
            return _paren(" ".join(parts), level > TERM or bar)
        if isinstance(t, Query):
            s = "query " + render_concept(t.concept, self.unicode)
            return _paren(s, level > EQ or bar)
        if isinstance(t, Eq):
            s = f"{self.term(t.lhs, EQ)} = {self.term(t.rhs, EQ, bar)}"
            return _paren(s, level > TERM)
        if isinstance(t, App):
            s = f"{self.term(t.fn, APP)} {self.term(t.arg, ARG)}"
            return _paren(s, level > APP)
        if isinstance(t, Cons):
            s = f"cons {self.term(t.head, ARG)} {self.term(t.tail, ARG)}"
            return _paren(s, level > APP)
        if isinstance(t, (Head, Tail, Null, Fix)):
            kw = {Head: "head", Tail: "tail", Null: "null", Fix: "fix"}[type(t)]
            arg = t.body if isinstance(t, Fix) else t.arg
            return _paren(f"{kw} {self.term(arg, ARG)}", level > APP)
        if isinstance(t, Proj):
            return f"{self.term(t.subject, ARG)}.{render_role(t.role, self.unicode)}"
        raise TypeError(f"not a term: {t!r}")


def pretty_print(x: Union[Term, Type, Value], unicode: bool = False) -> str:
    """
    Concrete syntax that parses back to the same AST (up to renaming of
    bound variables).
    """
    p = _Printer(unicode=unicode)
    if isinstance(x, _TYPES):
        return p.type_(x)
    if isinstance(x, _VALUES):
        return p.value(x, TERM, False)
    return p.term(x, TERM)


def show_value(v: Value, unicode: bool = False) -> str:
    """Display form: `nil` without its annotation."""
    return _Printer(unicode=unicode, annotate_nil=False).value(v, TERM, False)
