from __future__ import annotations

from typing import FrozenSet, List, Union

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
    ConceptExpr,
    Datatype,
    Exists,
    Forall,
    Inverse,
    Nominal,
    Not,
    Or,
    PrimTag,
    AtomicRole,
    RoleExpr,
)
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.lexer import TokenStream

DL_KEYWORDS: FrozenSet[str] = frozenset({"Top", "Bot", "sub", "equiv", "exists", "forall"})

XSD_TAGS = {
    "xsd:string": PrimTag.STRING,
    "xsd:String": PrimTag.STRING,
    "xsd:boolean": PrimTag.BOOL,
    "xsd:Boolean": PrimTag.BOOL,
}


class ConceptParser(TokenStream):
    """
    Concept and role expressions.

        concept := and ('|' and)*
        and     := unary ('&' unary)*
        unary   := '!' unary | ('exists'|'forall') role '.' unary | atom
        atom    := 'Top' | 'Bot' | '{' name '}' | xsd:tag | '(' concept ')' | name
        role    := name ('^-')*
    """

    reserved: FrozenSet[str] = DL_KEYWORDS

    def name(self, what: str = "name") -> str:
        tok = self.current
        if tok.kind != "ident" or tok.value in self.reserved:
            self.fail(f"expected {what}")
        self.advance()
        return tok.value

    def role(self) -> RoleExpr:
        r: RoleExpr = AtomicRole(self.name("role name"))
        while self.accept("sym", "^-"):
            r = Inverse(r)
        return r

    def concept(self) -> ConceptExpr:
        c = self.conjunction()
        while self.accept("sym", "|"):
            c = Or(c, self.conjunction())
        return c

    def conjunction(self) -> ConceptExpr:
        c = self.unary()
        while self.accept("sym", "&"):
            c = And(c, self.unary())
        return c

    def unary(self) -> ConceptExpr:
        if self.accept("sym", "!"):
            return Not(self.unary())
        if self.at_keyword("exists", "forall"):
            quant = self.advance().value
            r = self.role()
            self.expect("sym", ".")
            filler = self.unary()
            return Exists(r, filler) if quant == "exists" else Forall(r, filler)
        return self.atom()

    def atom(self) -> ConceptExpr:
        tok = self.current
        if self.accept("ident", "Top"):
            return TOP
        if self.accept("ident", "Bot"):
            return BOTTOM
        if tok.kind == "xsd":
            if tok.value not in XSD_TAGS:
                self.fail("expected xsd:string or xsd:boolean")
            self.advance()
            return Datatype(XSD_TAGS[tok.value])
        if self.accept("sym", "{"):
            obj = self.name("object name")
            self.expect("sym", "}")
            return Nominal(obj)
        if self.accept("sym", "("):
            c = self.concept()
            self.expect("sym", ")")
            return c
        if tok.kind == "ident" and tok.value not in self.reserved:
            self.advance()
            return Atomic(tok.value)
        self.fail("expected a concept")
        raise AssertionError("unreachable")


class KBParser(ConceptParser):
    """
    One statement per axiom, optionally terminated by ';'.
    """

    def statements(self) -> List[Axiom]:
        out: List[Axiom] = []
        while not self.at("eof"):
            if self.accept("sym", ";"):
                continue
            out.append(self.statement())
        return out

    def statement(self) -> Axiom:
        tok, nxt = self.current, self.peek()
        if tok.kind == "ident" and tok.value in ("Domain", "Range") and self.at("sym", "(", nxt):
            return self.domain_or_range()
        if self.at_sym("(") and nxt.kind == "ident" and self.at("sym", ",", self.peek(2)):
            return self.role_assertion()
        if tok.kind == "ident" and tok.value not in self.reserved:
            if self.at("sym", "==", nxt):
                a = self.name("object name")
                self.advance()
                return ObjectEquivalence(a, self.name("object name"))
            if self.at("sym", ":", nxt):
                a = self.name("object name")
                self.advance()
                return ConceptAssertion(a, self.concept())
        lhs = self.concept()
        if self.accept("ident", "sub"):
            return Subsumption(lhs, self.concept())
        if self.accept("ident", "equiv"):
            return ConceptEquality(lhs, self.concept())
        self.fail("expected 'sub' or 'equiv'")
        raise AssertionError("unreachable")

    def domain_or_range(self) -> Axiom:
        kind = self.advance().value
        self.expect("sym", "(")
        r = self.role()
        self.expect("sym", ",")
        c = self.concept()
        self.expect("sym", ")")
        return domain_axiom(r, c) if kind == "Domain" else range_axiom(r, c)

    def role_assertion(self) -> Axiom:
        self.expect("sym", "(")
        subject = self.name("object name")
        self.expect("sym", ",")
        value: Union[str, bool, None] = None
        obj = None
        if self.at("string"):
            value = self.advance().value
        elif self.at_keyword("true", "false"):
            value = self.advance().value == "true"
        else:
            obj = self.name("object name or literal")
        self.expect("sym", ")")
        self.expect("sym", ":")
        role_tok = self.current
        r = self.role()
        if obj is not None:
            return RoleAssertion(subject, obj, r)
        if isinstance(r, Inverse):
            self.fail("a literal assertion needs a plain data role", role_tok)
        return DataAssertion(subject, r.name, value)  # type: ignore[arg-type,union-attr]


def parse_kb(text: str) -> KnowledgeBase:
    p = KBParser(text)
    axioms = p.statements()
    return KnowledgeBase.from_axioms(axioms)


def parse_concept(text: str) -> ConceptExpr:
    p = ConceptParser(text)
    c = p.concept()
    p.expect_end()
    return c


def parse_role(text: str) -> RoleExpr:
    p = ConceptParser(text)
    r = p.role()
    p.expect_end()
    return r


def parse_axiom(text: str) -> Axiom:
    """
    A single KB statement; Domain/Range and `equiv` are returned unexpanded.
    """
    p = KBParser(text)
    ax = p.statement()
    p.accept("sym", ";")
    p.expect_end()
    return ax
