from __future__ import annotations

from typing import Callable, Optional

from lambdadl.dl.concepts import Exists, Nominal, PrimTag, inverse, role_name
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.errors import EvaluationError
from lambdadl.evaluator.materialize import materialize_projection, materialize_query
from lambdadl.evaluator.outcomes import Done, EvalOutcome, Stepped, Stuck, StuckKind
from lambdadl.reasoner.service import Reasoner, reasoner_for
from lambdadl.syntax.printer import pretty_print
from lambdadl.syntax.subst import substitute
from lambdadl.syntax.terms import (
    FALSE,
    TRUE,
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
    as_value,
)
from lambdadl.syntax.types import Concept, Prim, Type


def _bool(b: bool) -> Term:
    return Lit(TRUE if b else FALSE)


class Stepper:
    """
    Call-by-value small-step reduction. Subterms reduce left to right; a
    `head nil` or `tail nil` redex makes the whole term stuck.
    """

    def __init__(self, kb: KnowledgeBase, reasoner: Optional[Reasoner] = None) -> None:
        self.kb = kb
        self.reasoner = reasoner or reasoner_for(kb)

    def _inside(self, sub: Term, rebuild: Callable[[Term], Term], rule: str) -> EvalOutcome:
        out = self.step(sub)
        if isinstance(out, Stepped):
            return Stepped(rebuild(out.next), out.rule, (rule,) + out.via)
        if isinstance(out, Done):
            raise AssertionError("congruence on a value")
        return out

    def _projection_type(self, a: str, t: Proj) -> Type:
        name = role_name(t.role)
        if not self.kb.is_data_role(name):
            return Concept(Exists(inverse(t.role), Nominal(a)))
        tag = self.kb.data_range(name)
        return Prim(tag or PrimTag.STRING)

    def step(self, t: Term) -> EvalOutcome:
        v = as_value(t)
        if v is not None:
            return Done(v)

        if isinstance(t, Var):
            raise EvaluationError(f"free variable {t.name}", t)

        if isinstance(t, Let):
            bv = as_value(t.bound)
            if bv is None:
                return self._inside(t.bound, lambda n: Let(t.name, n, t.body, span=t.span), "E-LET")
            return Stepped(substitute(t.body, t.name, bv), "E-LETV")

        if isinstance(t, Fix):
            fv = as_value(t.body)
            if fv is None:
                return self._inside(t.body, lambda n: Fix(n, span=t.span), "E-FIX")
            if not isinstance(fv, Closure):
                raise EvaluationError("fix of a non-function", t)
            return Stepped(substitute(fv.body, fv.param, t), "E-FIXV")

        if isinstance(t, App):
            fv = as_value(t.fn)
            if fv is None:
                return self._inside(t.fn, lambda n: App(n, t.arg, span=t.span), "E-APP1")
            av = as_value(t.arg)
            if av is None:
                return self._inside(t.arg, lambda n: App(t.fn, n, span=t.span), "E-APP2")
            if not isinstance(fv, Closure):
                raise EvaluationError("application of a non-function", t)
            return Stepped(substitute(fv.body, fv.param, av), "E-APPABS")

        if isinstance(t, If):
            cv = as_value(t.cond)
            if cv is None:
                return self._inside(t.cond, lambda n: If(n, t.then, t.else_, span=t.span), "E-IF")
            if cv == TRUE:
                return Stepped(t.then, "E-IF-TRUE")
            if cv == FALSE:
                return Stepped(t.else_, "E-IF-FALSE")
            raise EvaluationError("if on a non-boolean", t)

        if isinstance(t, Cons):
            if as_value(t.head) is None:
                return self._inside(t.head, lambda n: Cons(n, t.tail, span=t.span), "E-CONS1")
            if as_value(t.tail) is None:
                return self._inside(t.tail, lambda n: Cons(t.head, n, span=t.span), "E-CONS2")
            raise EvaluationError("cons onto a non-list", t)

        if isinstance(t, Null):
            lv = as_value(t.arg)
            if lv is None:
                return self._inside(t.arg, lambda n: Null(n, span=t.span), "E-NULL")
            if isinstance(lv, Nil):
                return Stepped(Lit(TRUE), "E-NULL-TRUE")
            if isinstance(lv, ConsV):
                return Stepped(Lit(FALSE), "E-NULL-FALSE")
            raise EvaluationError("null of a non-list", t)

        if isinstance(t, Head):
            lv = as_value(t.arg)
            if lv is None:
                return self._inside(t.arg, lambda n: Head(n, span=t.span), "E-HEAD")
            if isinstance(lv, ConsV):
                return Stepped(Lit(lv.head), "E-HEADV")
            if isinstance(lv, Nil):
                return Stuck(StuckKind.HEAD_NIL, t)
            raise EvaluationError("head of a non-list", t)

        if isinstance(t, Tail):
            lv = as_value(t.arg)
            if lv is None:
                return self._inside(t.arg, lambda n: Tail(n, span=t.span), "E-TAIL")
            if isinstance(lv, ConsV):
                return Stepped(Lit(lv.tail), "E-TAILV")
            if isinstance(lv, Nil):
                return Stuck(StuckKind.TAIL_NIL, t)
            raise EvaluationError("tail of a non-list", t)

        if isinstance(t, Query):
            return Stepped(Lit(materialize_query(self.kb, t.concept, Concept(t.concept), self.reasoner)), "E-QUERY")

        if isinstance(t, Proj):
            sv = as_value(t.subject)
            if sv is None:
                return self._inside(t.subject, lambda n: Proj(n, t.role, span=t.span), "E-PROJ")
            if not isinstance(sv, Object):
                raise EvaluationError("projection from a non-object", t)
            elem = self._projection_type(sv.name, t)
            return Stepped(Lit(materialize_projection(self.kb, sv.name, t.role, elem, self.reasoner)), "E-PROJV")

        if isinstance(t, Eq):
            lv = as_value(t.lhs)
            if lv is None:
                return self._inside(t.lhs, lambda n: Eq(n, t.rhs, span=t.span), "E-EQ1")
            rv = as_value(t.rhs)
            if rv is None:
                return self._inside(t.rhs, lambda n: Eq(t.lhs, n, span=t.span), "E-EQ2")
            return self._equivalence(t, lv, rv)

        if isinstance(t, Case):
            sv = as_value(t.scrutinee)
            if sv is None:
                return self._inside(
                    t.scrutinee, lambda n: Case(n, t.arms, t.default, span=t.span), "E-DISPATCH"
                )
            if not isinstance(sv, Object):
                raise EvaluationError("case on a non-object", t)
            if not t.arms:
                return Stepped(t.default, "E-DISPATCH-DEF")
            first = t.arms[0]
            if self.reasoner.is_instance(sv.name, first.concept):
                return Stepped(substitute(first.body, first.binder, sv), "E-DISPATCH-SUCC")
            return Stepped(Case(t.scrutinee, t.arms[1:], t.default, span=t.span), "E-DISPATCH-FAIL")

        raise EvaluationError(f"cannot reduce {pretty_print(t)}", t)

    def _equivalence(self, t: Eq, lv: Value, rv: Value) -> EvalOutcome:
        if isinstance(lv, Object) and isinstance(rv, Object):
            same = self.reasoner.are_equivalent_objects(lv.name, rv.name)
            return Stepped(_bool(same), "EQ-NOMINAL-TRUE" if same else "EQ-NOMINAL-FALSE")
        if isinstance(lv, PrimV) and isinstance(rv, PrimV) and type(lv.value) is type(rv.value):
            same = lv.value == rv.value
            return Stepped(_bool(same), "EQ-PRIM-TRUE" if same else "EQ-PRIM-FALSE")
        raise EvaluationError("equivalence between values of different kinds", t)


def step(kb: KnowledgeBase, t: Term, reasoner: Optional[Reasoner] = None) -> EvalOutcome:
    return Stepper(kb, reasoner).step(t)
