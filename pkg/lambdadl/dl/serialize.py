from __future__ import annotations

from typing import List

from lambdadl.dl.axioms import (
    Axiom,
    ConceptAssertion,
    ConceptEquality,
    DataAssertion,
    ObjectEquivalence,
    RoleAssertion,
    Subsumption,
)
from lambdadl.dl.concepts import (
    And,
    Atomic,
    Bottom,
    ConceptExpr,
    Datatype,
    Exists,
    Forall,
    Inverse,
    Nominal,
    Not,
    Or,
    RoleExpr,
    Top,
)
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.lexer import escape

_OR, _AND, _UNARY = 0, 1, 2

_ASCII = {"and": " & ", "or": " | ", "not": "!", "exists": "exists ", "forall": "forall ", "top": "Top", "bot": "Bot", "inv": "^-"}
_UNICODE = {"and": " ⊓ ", "or": " ⊔ ", "not": "¬", "exists": "∃", "forall": "∀", "top": "⊤", "bot": "⊥", "inv": "⁻"}


def render_role(r: RoleExpr, unicode: bool = False) -> str:
    if isinstance(r, Inverse):
        return render_role(r.inner, unicode) + (_UNICODE if unicode else _ASCII)["inv"]
    return r.name


def render_concept(c: ConceptExpr, unicode: bool = False) -> str:
    return _render(c, _OR, _UNICODE if unicode else _ASCII)


def is_atomic_concept(c: ConceptExpr) -> bool:
    return isinstance(c, (Atomic, Nominal, Top, Bottom, Datatype))


def _render(c: ConceptExpr, level: int, g: dict) -> str:
    if isinstance(c, Atomic):
        return c.name
    if isinstance(c, Nominal):
        return "{" + c.object + "}"
    if isinstance(c, Top):
        return g["top"]
    if isinstance(c, Bottom):
        return g["bot"]
    if isinstance(c, Datatype):
        return c.prim.xsd
    if isinstance(c, Not):
        return g["not"] + _render(c.operand, _UNARY, g)
    if isinstance(c, (Exists, Forall)):
        q = g["exists"] if isinstance(c, Exists) else g["forall"]
        role = render_role(c.role, g is _UNICODE)
        return f"{q}{role}." + _render(c.filler, _UNARY, g)
    if isinstance(c, And):
        s = _render(c.left, _AND, g) + g["and"] + _render(c.right, _UNARY, g)
        return f"({s})" if level > _AND else s
    if isinstance(c, Or):
        s = _render(c.left, _OR, g) + g["or"] + _render(c.right, _AND, g)
        return f"({s})" if level > _OR else s
    raise TypeError(f"not a concept expression: {c!r}")


def _literal(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return escape(value)


def render_axiom(ax: Axiom, unicode: bool = False) -> str:
    if isinstance(ax, Subsumption):
        op = " ⊑ " if unicode else " sub "
        return render_concept(ax.lhs, unicode) + op + render_concept(ax.rhs, unicode)
    if isinstance(ax, ConceptEquality):
        op = " ≡ " if unicode else " equiv "
        return render_concept(ax.lhs, unicode) + op + render_concept(ax.rhs, unicode)
    if isinstance(ax, ConceptAssertion):
        return f"{ax.object} : " + render_concept(ax.concept, unicode)
    if isinstance(ax, RoleAssertion):
        return f"({ax.subject}, {ax.object}) : " + render_role(ax.role, unicode)
    if isinstance(ax, DataAssertion):
        return f"({ax.subject}, {_literal(ax.value)}) : {ax.role}"
    if isinstance(ax, ObjectEquivalence):
        return f"{ax.a} == {ax.b}"
    raise TypeError(f"not an axiom: {ax!r}")


def serialize_kb(kb: KnowledgeBase) -> str:
    """
    Canonical text of a KB. Adjacent mutual inclusions print as `equiv`,
    which parses back to the same pair.
    """
    lines: List[str] = []
    tbox = list(kb.tbox)
    i = 0
    while i < len(tbox):
        ax = tbox[i]
        nxt = tbox[i + 1] if i + 1 < len(tbox) else None
        if (
            isinstance(ax, Subsumption)
            and isinstance(nxt, Subsumption)
            and ax.lhs == nxt.rhs
            and ax.rhs == nxt.lhs
            and ax.lhs != ax.rhs
        ):
            lines.append(render_axiom(ConceptEquality(ax.lhs, ax.rhs)))
            i += 2
            continue
        lines.append(render_axiom(ax))
        i += 1
    lines.extend(render_axiom(ax) for ax in kb.abox)
    return "".join(line + "\n" for line in lines)
