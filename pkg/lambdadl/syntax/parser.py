from __future__ import annotations

from typing import FrozenSet, Iterable, List, Optional

from lambdadl.dl.concepts import And, Or, PrimTag
from lambdadl.dl.lexer import Token
from lambdadl.dl.parser import DL_KEYWORDS, ConceptParser
from lambdadl.syntax.terms import (
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
    Var,
    as_value,
    is_list_value,
)
from lambdadl.syntax.types import BOOL, STRING, Concept, Func, ListType, Type

TERM_KEYWORDS: FrozenSet[str] = frozenset(
    {
        "let", "letrec", "in", "if", "then", "else", "fun", "case", "of", "type", "as", "default",
        "cons", "head", "tail", "null", "fix", "query", "nil", "true", "false", "list", "bool", "string",
    }
)

_UNARY_FORMS = {"head": Head, "tail": Tail, "null": Null, "fix": Fix}


class TermParser(ConceptParser):
    """
    term   := 'let' x '=' term 'in' term
            | 'letrec' x ':' type '=' term 'in' term
            | 'if' term 'then' term 'else' term
            | 'fun' '(' x ':' type ')' '.' term
            | 'case' term 'of' ('|' 'type' concept 'as' x '->' term)* '|' 'default' term
            | app ('=' app)?
    app    := 'query' concept
            | ('cons' post post | ('head'|'tail'|'null'|'fix') post | post) post*
    post   := atom ('.' role)*
    atom   := '(' term ')' | 'true' | 'false' | string | 'nil' '[' type ']' | name

    type   := list ('->' type)?
    list   := base 'list'*
    base   := 'bool' | 'string' | '(' type ')' | concept
    """

    reserved = DL_KEYWORDS | TERM_KEYWORDS

    def __init__(self, text: str, objects: Iterable[str] = (), bound: Iterable[str] = ()) -> None:
        super().__init__(text)
        self.objects = frozenset(objects)
        self.scope: List[str] = list(bound)

    # -------------------------
    # Types
    # -------------------------

    def type_(self) -> Type:
        t = self.list_type()
        if self.accept("sym", "->"):
            return Func(t, self.type_())
        return t

    def list_type(self) -> Type:
        t = self.base_type()
        while self.accept("ident", "list"):
            t = ListType(t)
        return t

    def base_type(self) -> Type:
        if self.accept("ident", "bool"):
            return BOOL
        if self.accept("ident", "string"):
            return STRING
        if self.accept("sym", "("):
            t = self.type_()
            self.expect("sym", ")")
            if isinstance(t, Concept) and self.at_sym("&", "|"):
                c = t.concept
                while self.accept("sym", "&"):
                    c = And(c, self.unary())
                while self.accept("sym", "|"):
                    c = Or(c, self.conjunction())
                return Concept(c)
            return t
        return Concept(self.concept())

    # -------------------------
    # Terms
    # -------------------------

    def binder(self) -> str:
        return self.name("variable name")

    def scoped(self, name: str, parse):
        self.scope.append(name)
        try:
            return parse()
        finally:
            self.scope.pop()

    def term(self) -> Term:
        tok = self.current
        if self.accept("ident", "let"):
            x = self.binder()
            self.expect("sym", "=")
            bound = self.term()
            self.expect("ident", "in")
            return Let(x, bound, self.scoped(x, self.term), span=tok.span)
        if self.accept("ident", "letrec"):
            x = self.binder()
            self.expect("sym", ":")
            annot = self.type_()
            self.expect("sym", "=")
            fn_body = self.scoped(x, self.term)
            self.expect("ident", "in")
            body = self.scoped(x, self.term)
            fixed = Fix(Lit(Closure(x, annot, fn_body), span=tok.span), span=tok.span)
            return Let(x, fixed, body, span=tok.span)
        if self.accept("ident", "if"):
            cond = self.term()
            self.expect("ident", "then")
            then = self.term()
            self.expect("ident", "else")
            return If(cond, then, self.term(), span=tok.span)
        if self.at_keyword("fun"):
            return self.abstraction()
        if self.at_keyword("case"):
            return self.case()
        lhs = self.application()
        eq_tok = self.current
        if self.accept("sym", "="):
            return Eq(lhs, self.application(), span=eq_tok.span)
        return lhs

    def abstraction(self) -> Term:
        tok = self.expect("ident", "fun")
        self.expect("sym", "(")
        x = self.binder()
        self.expect("sym", ":")
        annot = self.type_()
        self.expect("sym", ")")
        self.expect("sym", ".")
        body = self.scoped(x, self.term)
        return Lit(Closure(x, annot, body), span=tok.span)

    def case(self) -> Term:
        tok = self.expect("ident", "case")
        scrutinee = self.term()
        self.expect("ident", "of")
        arms: List[CaseArm] = []
        while True:
            self.expect("sym", "|", what="'|' before a case arm")
            arm_tok = self.current
            if self.accept("ident", "default"):
                default = self.term()
                return Case(scrutinee, tuple(arms), default, span=tok.span)
            self.expect("ident", "type", what="'type' or 'default'")
            c = self.concept()
            self.expect("ident", "as")
            x = self.binder()
            self.expect("sym", "->")
            body = self.scoped(x, self.term)
            arms.append(CaseArm(c, x, body, span=arm_tok.span))

    def application(self) -> Term:
        tok = self.current
        if self.accept("ident", "query"):
            return Query(self.concept(), span=tok.span)
        if self.accept("ident", "cons"):
            head = self.postfix()
            tail = self.postfix()
            fn = self.make_cons(head, tail, tok)
        elif tok.kind == "ident" and tok.value in _UNARY_FORMS:
            self.advance()
            fn = _UNARY_FORMS[tok.value](self.postfix(), span=tok.span)
        else:
            fn = self.postfix()
        while self.starts_atom():
            arg_tok = self.current
            fn = App(fn, self.postfix(), span=arg_tok.span)
        return fn

    def make_cons(self, head: Term, tail: Term, tok: Token) -> Term:
        h, t = as_value(head), as_value(tail)
        if h is not None and t is not None and is_list_value(t):
            return Lit(ConsV(h, t), span=tok.span)
        return Cons(head, tail, span=tok.span)

    def starts_atom(self) -> bool:
        tok = self.current
        if tok.kind == "string":
            return True
        if tok.kind == "sym":
            return tok.value == "("
        if tok.kind == "ident":
            return tok.value in ("true", "false", "nil") or tok.value not in self.reserved
        return False

    def postfix(self) -> Term:
        t = self.term_atom()
        while self.at_sym("."):
            dot = self.advance()
            t = Proj(t, self.role(), span=dot.span)
        return t

    def term_atom(self) -> Term:
        tok = self.current
        if self.accept("sym", "("):
            t = self.term()
            self.expect("sym", ")")
            return t
        if self.accept("ident", "true"):
            return Lit(PrimV(True), span=tok.span)
        if self.accept("ident", "false"):
            return Lit(PrimV(False), span=tok.span)
        if tok.kind == "string":
            self.advance()
            return Lit(PrimV(tok.value), span=tok.span)
        if self.accept("ident", "nil"):
            self.expect("sym", "[", what="'[' after nil (nil needs its element type)")
            annot = self.type_()
            self.expect("sym", "]")
            return Lit(Nil(annot), span=tok.span)
        if tok.kind == "ident" and tok.value not in self.reserved:
            self.advance()
            return self.resolve(tok)
        self.fail("expected a term")
        raise AssertionError("unreachable")

    def resolve(self, tok: Token) -> Term:
        if tok.value in self.scope:
            return Var(tok.value, span=tok.span)
        if tok.value in self.objects:
            return Lit(Object(tok.value), span=tok.span)
        return Var(tok.value, span=tok.span)


def parse_term(text: str, objects: Iterable[str] = (), bound: Iterable[str] = ()) -> Term:
    """
    Parse a program. Free identifiers naming one of `objects` become object
    literals; names in `bound` (or bound by a binder) stay variables.
    """
    p = TermParser(text, objects, bound)
    t = p.term()
    p.expect_end()
    return t


def parse_type(text: str) -> Type:
    p = TermParser(text)
    t = p.type_()
    p.expect_end()
    return t


def prim_type(tag: PrimTag) -> Type:
    return BOOL if tag is PrimTag.BOOL else STRING


def parse_repl_line(text: str, objects: Iterable[str] = (), bound: Iterable[str] = ()) -> tuple:
    """
    `let x = t` (no `in`) binds a session name; anything else is a term.
    Returns (name or None, term).
    """
    p = TermParser(text, objects, bound)
    if p.at_keyword("let") and p.peek().kind == "ident" and p.at("sym", "=", p.peek(2)):
        save = p.pos
        p.advance()
        name = p.binder()
        p.advance()
        t = p.term()
        if p.at("eof"):
            return name, t
        p.pos = save
    t = p.term()
    p.expect_end()
    return None, t
