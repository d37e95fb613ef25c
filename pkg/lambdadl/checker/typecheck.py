from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from lambdadl.checker.bounds import lub
from lambdadl.checker.context import EMPTY_CONTEXT, TypingContext
from lambdadl.checker.subtyping import is_subtype, subtype_failure
from lambdadl.dl.concepts import (
    And,
    ConceptExpr,
    Datatype,
    Exists,
    Forall,
    Nominal,
    Not,
    Or,
    concept_names,
    inverse,
    is_data_range,
    is_inverse,
    nominal_names,
    role_name,
    role_names,
)
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.serialize import render_concept
from lambdadl.errors import Span, TypingError, TypingErrorKind
from lambdadl.events import emit
from lambdadl.reasoner.service import Reasoner, reasoner_for
from lambdadl.syntax.printer import show_type
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
    span_of,
)
from lambdadl.syntax.types import BOOL, STRING, Concept, Func, ListType, Prim, Type


@dataclass(frozen=True)
class CheckerConfig:
    """
    side_conditions: enforce the T-EQN emptiness premise and the two
    T-DISPATCH usefulness premises. Reduction successors are checked
    without them.
    """
    side_conditions: bool = True


def _show(t: Type) -> str:
    return show_type(t, unicode=True)


class TypeChecker:
    """
    Algorithmic Γ ⊢ t : T. Returns the minimal type; subsumption is applied
    only to application arguments, joins use lub.
    """

    def __init__(self, kb: KnowledgeBase, cfg: Optional[CheckerConfig] = None, reasoner: Optional[Reasoner] = None) -> None:
        self.kb = kb
        self.cfg = cfg or CheckerConfig()
        self.reasoner = reasoner or reasoner_for(kb)

    # -------------------------
    # Well-formedness
    # -------------------------

    def _stray_datatype(self, c: ConceptExpr, under_data_role: bool = False) -> bool:
        if isinstance(c, Datatype):
            return not under_data_role
        if isinstance(c, Not):
            return self._stray_datatype(c.operand, under_data_role)
        if isinstance(c, (And, Or)):
            return self._stray_datatype(c.left, under_data_role) or self._stray_datatype(c.right, under_data_role)
        if isinstance(c, (Exists, Forall)):
            data = self.kb.is_data_role(role_name(c.role))
            if data and not is_data_range(c.filler):
                return True
            return self._stray_datatype(c.filler, data)
        return False

    def check_concept(self, c: ConceptExpr, span: Optional[Span] = None) -> None:
        sig = self.kb.signature
        unknown = sorted(concept_names(c) - sig.concepts)
        if unknown:
            raise TypingError(TypingErrorKind.UNKNOWN_NAME, "WF-TYPE", f"unknown concept name {unknown[0]}", span)
        unknown = sorted(nominal_names(c) - sig.objects)
        if unknown:
            raise TypingError(TypingErrorKind.UNKNOWN_OBJECT, "WF-TYPE", f"unknown object {unknown[0]}", span)
        unknown = sorted(role_names(c) - sig.all_roles)
        if unknown:
            raise TypingError(TypingErrorKind.UNKNOWN_NAME, "WF-TYPE", f"unknown role {unknown[0]}", span)
        if self._stray_datatype(c):
            raise TypingError(
                TypingErrorKind.MISMATCH,
                "WF-TYPE",
                f"datatype outside a data-role filler in {render_concept(c, unicode=True)}",
                span,
            )

    def check_type(self, t: Type, span: Optional[Span] = None) -> None:
        if isinstance(t, Concept):
            self.check_concept(t.concept, span)
        elif isinstance(t, Func):
            self.check_type(t.domain, span)
            self.check_type(t.codomain, span)
        elif isinstance(t, ListType):
            self.check_type(t.element, span)

    # -------------------------
    # Values
    # -------------------------

    def value(self, ctx: TypingContext, v: Value, span: Optional[Span]) -> Type:
        if isinstance(v, PrimV):
            return BOOL if isinstance(v.value, bool) else STRING
        if isinstance(v, Object):
            if v.name not in self.kb.objects:
                raise TypingError(TypingErrorKind.UNKNOWN_OBJECT, "T-OBJECT", f"unknown object {v.name}", span)
            return Concept(Nominal(v.name))
        if isinstance(v, Nil):
            self.check_type(v.annot, span)
            return ListType(v.annot)
        if isinstance(v, ConsV):
            return self._cons(self.value(ctx, v.head, span), self.value(ctx, v.tail, span), span)
        if isinstance(v, Closure):
            self.check_type(v.annot, span)
            return Func(v.annot, self.check(ctx.extend(v.param, v.annot), v.body))
        raise TypeError(f"not a value: {v!r}")

    def _cons(self, head: Type, tail: Type, span: Optional[Span]) -> Type:
        if not isinstance(tail, ListType):
            raise TypingError(
                TypingErrorKind.NON_LIST_ELIM, "T-CONS", f"cons tail has type {_show(tail)}, expected a list", span
            )
        try:
            return ListType(lub(head, tail.element))
        except TypingError as e:
            raise TypingError(e.kind, "T-CONS", f"cons: {e.message} ({e.rule})", span) from e

    # -------------------------
    # Terms
    # -------------------------

    def check(self, ctx: TypingContext, t: Term) -> Type:
        span = span_of(t)

        if isinstance(t, Var):
            found = ctx.lookup(t.name)
            if found is None:
                raise TypingError(TypingErrorKind.UNBOUND_VARIABLE, "T-VAR", f"unbound variable {t.name}", span)
            return found

        if isinstance(t, Lit):
            return self.value(ctx, t.value, span)

        if isinstance(t, Let):
            bound = self.check(ctx, t.bound)
            return self.check(ctx.extend(t.name, bound), t.body)

        if isinstance(t, Fix):
            ft = self.check(ctx, t.body)
            if not isinstance(ft, Func):
                raise TypingError(TypingErrorKind.MISMATCH, "T-FIX", f"fix expects a function, found {_show(ft)}", span)
            if not is_subtype(self.kb, ft.codomain, ft.domain, self.reasoner):
                raise TypingError(
                    TypingErrorKind.MISMATCH,
                    "T-FIX",
                    f"fix: result {_show(ft.codomain)} is not a subtype of argument {_show(ft.domain)}",
                    span,
                )
            return ft.domain

        if isinstance(t, App):
            ft = self.check(ctx, t.fn)
            at = self.check(ctx, t.arg)
            if not isinstance(ft, Func):
                raise TypingError(TypingErrorKind.MISMATCH, "T-APP", f"applying a non-function of type {_show(ft)}", span)
            failed = subtype_failure(self.kb, at, ft.domain, self.reasoner)
            if failed:
                raise TypingError(
                    TypingErrorKind.MISMATCH,
                    failed,
                    f"argument type {_show(at)} is not a subtype of parameter type {_show(ft.domain)}",
                    span_of(t.arg) or span,
                )
            return ft.codomain

        if isinstance(t, If):
            ct = self.check(ctx, t.cond)
            if ct != BOOL:
                raise TypingError(TypingErrorKind.MISMATCH, "T-IF", f"condition has type {_show(ct)}, expected bool", span)
            then, else_ = self.check(ctx, t.then), self.check(ctx, t.else_)
            try:
                return lub(then, else_)
            except TypingError as e:
                raise TypingError(e.kind, "T-IF", f"branches disagree: {e.message} ({e.rule})", span) from e

        if isinstance(t, Cons):
            return self._cons(self.check(ctx, t.head), self.check(ctx, t.tail), span)

        if isinstance(t, (Null, Head, Tail)):
            rule = {Null: "T-NULL", Head: "T-HEAD", Tail: "T-TAIL"}[type(t)]
            lt = self.check(ctx, t.arg)
            if not isinstance(lt, ListType):
                raise TypingError(TypingErrorKind.NON_LIST_ELIM, rule, f"expected a list, found {_show(lt)}", span)
            if isinstance(t, Null):
                return BOOL
            return lt.element if isinstance(t, Head) else lt

        if isinstance(t, Query):
            self.check_concept(t.concept, span)
            if not self.reasoner.is_satisfiable(t.concept):
                raise TypingError(
                    TypingErrorKind.UNSATISFIABLE_QUERY,
                    "T-QUERY",
                    f"query concept {render_concept(t.concept, unicode=True)} is unsatisfiable",
                    span,
                )
            return ListType(Concept(t.concept))

        if isinstance(t, Proj):
            return self._projection(ctx, t, span)

        if isinstance(t, Eq):
            return self._equivalence(ctx, t, span)

        if isinstance(t, Case):
            return self._dispatch(ctx, t, span)

        raise TypeError(f"not a term: {t!r}")

    def _projection(self, ctx: TypingContext, t: Proj, span: Optional[Span]) -> Type:
        st = self.check(ctx, t.subject)
        if not isinstance(st, Concept):
            raise TypingError(
                TypingErrorKind.NON_CONCEPT_PROJECTION, "T-PROJ", f"projection from a term of type {_show(st)}", span
            )
        name = role_name(t.role)
        if self.kb.is_data_role(name):
            if is_inverse(t.role):
                raise TypingError(TypingErrorKind.MISMATCH, "T-PROJ", f"data role {name} has no inverse", span)
            tag = self.kb.data_range(name)
            if tag is None:
                raise TypingError(
                    TypingErrorKind.UNTYPED_DATA_ROLE, "T-PROJ", f"data role {name} has no declared datatype", span
                )
            return ListType(Prim(tag))
        if not self.kb.is_object_role(name):
            raise TypingError(TypingErrorKind.UNKNOWN_NAME, "T-PROJ", f"unknown role {name}", span)
        return ListType(Concept(Exists(inverse(t.role), st.concept)))

    def _equivalence(self, ctx: TypingContext, t: Eq, span: Optional[Span]) -> Type:
        lt, rt = self.check(ctx, t.lhs), self.check(ctx, t.rhs)
        if isinstance(lt, Concept) and isinstance(rt, Concept):
            if self.cfg.side_conditions and not self.reasoner.is_satisfiable(And(lt.concept, rt.concept)):
                raise TypingError(
                    TypingErrorKind.EMPTY_INTERSECTION,
                    "T-EQN",
                    f"{_show(lt)} and {_show(rt)} are disjoint; the comparison is always false",
                    span,
                )
            return BOOL
        if isinstance(lt, Prim) and isinstance(rt, Prim):
            if lt != rt:
                raise TypingError(TypingErrorKind.MISMATCH, "T-EQP", f"comparing {_show(lt)} with {_show(rt)}", span)
            return BOOL
        if isinstance(lt, (Concept, Prim)) and isinstance(rt, (Concept, Prim)):
            raise TypingError(TypingErrorKind.MISMATCH, "T-EQN", f"comparing {_show(lt)} with {_show(rt)}", span)
        raise TypingError(
            TypingErrorKind.MISMATCH,
            "T-EQ",
            f"equivalence is not defined on {_show(lt)} and {_show(rt)}",
            span,
        )

    def _dispatch(self, ctx: TypingContext, t: Case, span: Optional[Span]) -> Type:
        st = self.check(ctx, t.scrutinee)
        if not isinstance(st, Concept):
            raise TypingError(TypingErrorKind.MISMATCH, "T-DISPATCH", f"case on a term of type {_show(st)}", span)
        results: List[Type] = []
        for j, arm in enumerate(t.arms):
            where = arm.span or span
            self.check_concept(arm.concept, where)
            if self.cfg.side_conditions:
                for earlier in t.arms[:j]:
                    if self.reasoner.is_subsumed(arm.concept, earlier.concept):
                        raise TypingError(
                            TypingErrorKind.SUBSUMED_CASE,
                            "T-DISPATCH",
                            f"case {render_concept(arm.concept, unicode=True)} is subsumed by earlier case "
                            f"{render_concept(earlier.concept, unicode=True)}",
                            where,
                        )
                if not self.reasoner.is_satisfiable(And(arm.concept, st.concept)):
                    raise TypingError(
                        TypingErrorKind.EMPTY_INTERSECTION,
                        "T-DISPATCH",
                        f"case {render_concept(arm.concept, unicode=True)} cannot match a {_show(st)}",
                        where,
                    )
            results.append(self.check(ctx.extend(arm.binder, Concept(arm.concept)), arm.body))
        results.append(self.check(ctx, t.default))
        out = results[0]
        for r in results[1:]:
            try:
                out = lub(out, r)
            except TypingError as e:
                raise TypingError(e.kind, "T-DISPATCH", f"case arms disagree: {e.message} ({e.rule})", span) from e
        return out


def typecheck(
    kb: KnowledgeBase,
    ctx: Optional[TypingContext],
    t: Term,
    cfg: Optional[CheckerConfig] = None,
    reasoner: Optional[Reasoner] = None,
) -> Type:
    """
    Γ ⊢ t : T. Raises TypingError naming the violated rule; ResourceLimit
    from the reasoner propagates unchanged.
    """
    try:
        return TypeChecker(kb, cfg, reasoner).check(ctx or EMPTY_CONTEXT, t)
    except TypingError as e:
        emit("typecheck.rejected", rule=e.rule, kind=e.kind.value, span=str(e.span) if e.span else None)
        raise
