from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Tuple, Union

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
    Null,
    Object,
    Proj,
    Query,
    Tail,
    Term,
    Value,
    Var,
    as_value,
)

_VALUE_TYPES = (Closure, ConsV)


def free_variables(t: Union[Term, Value]) -> FrozenSet[str]:
    if isinstance(t, Var):
        return frozenset({t.name})
    if isinstance(t, Lit):
        return free_variables(t.value)
    if isinstance(t, Closure):
        return free_variables(t.body) - {t.param}
    if isinstance(t, ConsV):
        return free_variables(t.head) | free_variables(t.tail)
    if isinstance(t, Let):
        return free_variables(t.bound) | (free_variables(t.body) - {t.name})
    if isinstance(t, Case):
        out = free_variables(t.scrutinee) | free_variables(t.default)
        for arm in t.arms:
            out |= free_variables(arm.body) - {arm.binder}
        return out
    if isinstance(t, (App, Eq, Cons)):
        a, b = _pair(t)
        return free_variables(a) | free_variables(b)
    if isinstance(t, If):
        return free_variables(t.cond) | free_variables(t.then) | free_variables(t.else_)
    if isinstance(t, (Head, Tail, Null)):
        return free_variables(t.arg)
    if isinstance(t, Fix):
        return free_variables(t.body)
    if isinstance(t, Proj):
        return free_variables(t.subject)
    return frozenset()


def _pair(t):
    if isinstance(t, App):
        return t.fn, t.arg
    if isinstance(t, Eq):
        return t.lhs, t.rhs
    return t.head, t.tail


def is_closed(t: Union[Term, Value]) -> bool:
    return not free_variables(t)


def object_names(t: Union[Term, Value]) -> FrozenSet[str]:
    """Objects occurring as literals anywhere in t."""
    if isinstance(t, Object):
        return frozenset({t.name})
    if isinstance(t, Lit):
        return object_names(t.value)
    if isinstance(t, Closure):
        return object_names(t.body)
    if isinstance(t, ConsV):
        return object_names(t.head) | object_names(t.tail)
    if isinstance(t, Let):
        return object_names(t.bound) | object_names(t.body)
    if isinstance(t, Case):
        out = object_names(t.scrutinee) | object_names(t.default)
        for arm in t.arms:
            out |= object_names(arm.body)
        return out
    if isinstance(t, (App, Eq, Cons)):
        a, b = _pair(t)
        return object_names(a) | object_names(b)
    if isinstance(t, If):
        return object_names(t.cond) | object_names(t.then) | object_names(t.else_)
    if isinstance(t, (Head, Tail, Null)):
        return object_names(t.arg)
    if isinstance(t, Fix):
        return object_names(t.body)
    if isinstance(t, Proj):
        return object_names(t.subject)
    return frozenset()


def rename_from_objects(x: str, body: Term) -> Tuple[str, Term]:
    """
    Rename binder x when body mentions an object literal of the same name,
    which would otherwise print as the bound variable.
    """
    objs = object_names(body)
    if x not in objs:
        return x, body
    y = _fresh(x, free_variables(body) | objs)
    return y, substitute(body, x, Var(y))


def _fresh(base: str, avoid: FrozenSet[str]) -> str:
    for i in itertools.count(1):
        name = f"{base}{i}"
        if name not in avoid:
            return name
    raise AssertionError("unreachable")


class _Subst:
    def __init__(self, name: str, replacement: Term) -> None:
        self.name = name
        self.replacement = replacement
        self.fv = free_variables(replacement)

    def binder(self, x: str, body: Term):
        """
        Returns (binder, body) after renaming x if it would capture a free
        variable of the replacement. None when x shadows the substituted name.
        """
        if x == self.name:
            return None
        if x in self.fv and self.name in free_variables(body):
            y = _fresh(x, self.fv | free_variables(body) | {self.name})
            body = substitute(body, x, Var(y))
            x = y
        return x, body

    def value(self, v: Value) -> Value:
        if isinstance(v, Closure):
            r = self.binder(v.param, v.body)
            if r is None:
                return v
            x, body = r
            return Closure(x, v.annot, self.term(body))
        if isinstance(v, ConsV):
            return ConsV(self.value(v.head), self.value(v.tail))
        return v

    def term(self, t: Term) -> Term:
        if isinstance(t, Var):
            return self.replacement if t.name == self.name else t
        if isinstance(t, Lit):
            if isinstance(t.value, _VALUE_TYPES):
                return Lit(self.value(t.value), span=t.span)
            return t
        if isinstance(t, Let):
            bound = self.term(t.bound)
            r = self.binder(t.name, t.body)
            if r is None:
                return Let(t.name, bound, t.body, span=t.span)
            x, body = r
            return Let(x, bound, self.term(body), span=t.span)
        if isinstance(t, Case):
            arms = []
            for arm in t.arms:
                r = self.binder(arm.binder, arm.body)
                if r is None:
                    arms.append(arm)
                else:
                    x, body = r
                    arms.append(CaseArm(arm.concept, x, self.term(body), span=arm.span))
            return Case(self.term(t.scrutinee), tuple(arms), self.term(t.default), span=t.span)
        if isinstance(t, App):
            return App(self.term(t.fn), self.term(t.arg), span=t.span)
        if isinstance(t, Eq):
            return Eq(self.term(t.lhs), self.term(t.rhs), span=t.span)
        if isinstance(t, Cons):
            return Cons(self.term(t.head), self.term(t.tail), span=t.span)
        if isinstance(t, If):
            return If(self.term(t.cond), self.term(t.then), self.term(t.else_), span=t.span)
        if isinstance(t, Head):
            return Head(self.term(t.arg), span=t.span)
        if isinstance(t, Tail):
            return Tail(self.term(t.arg), span=t.span)
        if isinstance(t, Null):
            return Null(self.term(t.arg), span=t.span)
        if isinstance(t, Fix):
            return Fix(self.term(t.body), span=t.span)
        if isinstance(t, Proj):
            return Proj(self.term(t.subject), t.role, span=t.span)
        if isinstance(t, Query):
            return t
        raise TypeError(f"not a term: {t!r}")


def substitute(body: Term, name: str, replacement: Union[Term, Value]) -> Term:
    """
    [name ↦ replacement] body, capture-avoiding. Only free occurrences of
    name are replaced.
    """
    if not isinstance(replacement, (Var, Lit, Let, Fix, App, If, Cons, Null, Head, Tail, Query, Proj, Case, Eq)):
        replacement = Lit(replacement)
    return _Subst(name, replacement).term(body)


def substitute_all(body: Term, bindings: Dict[str, Value]) -> Term:
    for name, v in bindings.items():
        body = substitute(body, name, v)
    return body


# -------------------------
# Alpha equivalence
# -------------------------


def _canon(t: Union[Term, Value], env: Dict[str, int], depth: int) -> tuple:
    """
    Nameless form: bound variables become binder depths, free ones keep
    their names, and `cons v1 v2` over values is the same as the list value.
    """
    if isinstance(t, (Cons,)):
        v = as_value(t)
        if v is not None:
            return _canon(v, env, depth)
    if isinstance(t, Lit):
        return _canon(t.value, env, depth)
    if isinstance(t, Var):
        return ("bound", depth - env[t.name]) if t.name in env else ("free", t.name)
    if isinstance(t, Closure):
        return ("fun", t.annot, _canon(t.body, {**env, t.param: depth}, depth + 1))
    if isinstance(t, ConsV):
        return ("cons", _canon(t.head, env, depth), _canon(t.tail, env, depth))
    if isinstance(t, Let):
        return ("let", _canon(t.bound, env, depth), _canon(t.body, {**env, t.name: depth}, depth + 1))
    if isinstance(t, Case):
        arms = tuple(
            (arm.concept, _canon(arm.body, {**env, arm.binder: depth}, depth + 1)) for arm in t.arms
        )
        return ("case", _canon(t.scrutinee, env, depth), arms, _canon(t.default, env, depth))
    if isinstance(t, (App, Eq, Cons)):
        a, b = _pair(t)
        return (type(t).__name__, _canon(a, env, depth), _canon(b, env, depth))
    if isinstance(t, If):
        return ("if", _canon(t.cond, env, depth), _canon(t.then, env, depth), _canon(t.else_, env, depth))
    if isinstance(t, (Head, Tail, Null)):
        return (type(t).__name__, _canon(t.arg, env, depth))
    if isinstance(t, Fix):
        return ("fix", _canon(t.body, env, depth))
    if isinstance(t, Proj):
        return ("proj", _canon(t.subject, env, depth), t.role)
    # Query and the atomic values compare structurally.
    return ("atom", t)


def alpha_equivalent(t: Union[Term, Value], u: Union[Term, Value]) -> bool:
    return _canon(t, {}, 0) == _canon(u, {}, 0)
