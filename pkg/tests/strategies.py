from __future__ import annotations

from typing import List, Optional, Tuple

from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite

from lambdadl.checker.typecheck import typecheck
from lambdadl.dl.axioms import Axiom, ConceptAssertion, ObjectEquivalence, RoleAssertion, Subsumption
from lambdadl.dl.concepts import (
    BOTTOM,
    TOP,
    And,
    Atomic,
    AtomicRole,
    ConceptExpr,
    Exists,
    Forall,
    Inverse,
    Nominal,
    Not,
    Or,
    RoleExpr,
)
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.parser import parse_concept
from lambdadl.errors import ResourceLimit, TypingError
from lambdadl.reasoner.interpretation import FiniteInterpretation
from lambdadl.reasoner.service import Reasoner
from lambdadl.syntax.terms import (
    FALSE,
    TRUE,
    App,
    Case,
    CaseArm,
    Closure,
    Cons,
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
)
from lambdadl.syntax.types import BOOL, STRING, Concept, Func, ListType, Type


# ---- Small signatures for reasoner properties ----

CONCEPT_NAMES = ("A", "B", "C", "D")
ROLE_NAMES = ("r", "s", "t")
OBJECT_NAMES = ("a", "b", "c", "d")


def objects() -> st.SearchStrategy[str]:
    return st.sampled_from(OBJECT_NAMES)


@composite
def roles(draw: DrawFn) -> RoleExpr:
    r = AtomicRole(draw(st.sampled_from(ROLE_NAMES)))
    return Inverse(r) if draw(st.booleans()) else r


def concepts(max_leaves: int = 5) -> st.SearchStrategy[ConceptExpr]:
    leaves = st.one_of(
        st.sampled_from(CONCEPT_NAMES).map(Atomic),
        objects().map(Nominal),
        st.just(TOP),
        st.just(BOTTOM),
    )

    def extend(inner: st.SearchStrategy[ConceptExpr]) -> st.SearchStrategy[ConceptExpr]:
        return st.one_of(
            inner.map(Not),
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Exists, roles(), inner),
            st.builds(Forall, roles(), inner),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@composite
def assertions(draw: DrawFn) -> Axiom:
    """A concept or role assertion."""
    if draw(st.booleans()):
        return ConceptAssertion(draw(objects()), draw(concepts(3)))
    return RoleAssertion(draw(objects()), draw(objects()), AtomicRole(draw(st.sampled_from(ROLE_NAMES))))


@composite
def axioms(draw: DrawFn) -> Axiom:
    kind = draw(st.sampled_from(("sub", "assert", "assert", "same")))
    if kind == "sub":
        return Subsumption(draw(concepts(3)), draw(concepts(3)))
    if kind == "same":
        return ObjectEquivalence(draw(objects()), draw(objects()))
    return draw(assertions())


@composite
def small_kbs(draw: DrawFn) -> KnowledgeBase:
    return KnowledgeBase.from_axioms(draw(st.lists(axioms(), min_size=0, max_size=6)))


@composite
def interpretations(draw: DrawFn) -> FiniteInterpretation:
    n = draw(st.integers(min_value=1, max_value=4))
    universe = frozenset(range(n))
    elements = st.sampled_from(sorted(universe))
    subsets = st.frozensets(elements)
    pairs = st.frozensets(st.tuples(elements, elements))
    return FiniteInterpretation(
        universe=universe,
        concept_map={c: draw(subsets) for c in CONCEPT_NAMES},
        role_map={r: draw(pairs) for r in ROLE_NAMES},
        object_map={o: draw(elements) for o in OBJECT_NAMES},
    )


# ---- Types over the music knowledge base ----

MUSIC_CONCEPTS = ("MusicArtist", "MusicGroup", "Song", "RadioStation")
MUSIC_OBJECTS = ("beatles", "coolFm", "hendrix", "machineGun")
MUSIC_ROLES = (
    AtomicRole("recorded"),
    AtomicRole("influencedBy"),
    AtomicRole("playedAt"),
    Inverse(AtomicRole("recorded")),
    Inverse(AtomicRole("playedAt")),
)
QUERIES = tuple(
    parse_concept(s)
    for s in (
        "MusicArtist",
        "MusicGroup",
        "Song",
        "RadioStation",
        "Top",
        "exists recorded.Song",
        "exists influencedBy.Top",
        "MusicArtist & exists recorded.Song",
        "Song | RadioStation",
    )
)

MUSIC_ROLE_NAMES = ("recorded", "influencedBy", "playedAt")


@composite
def music_axioms(draw: DrawFn) -> Axiom:
    """Positive facts and atomic inclusions; a music KB stays consistent under them."""
    kind = draw(st.sampled_from(("concept", "role", "sub")))
    if kind == "concept":
        return ConceptAssertion(draw(st.sampled_from(MUSIC_OBJECTS)), Atomic(draw(st.sampled_from(MUSIC_CONCEPTS))))
    if kind == "role":
        subject, obj = draw(st.sampled_from(MUSIC_OBJECTS)), draw(st.sampled_from(MUSIC_OBJECTS))
        return RoleAssertion(subject, obj, AtomicRole(draw(st.sampled_from(MUSIC_ROLE_NAMES))))
    lhs, rhs = draw(st.lists(st.sampled_from(MUSIC_CONCEPTS), min_size=2, max_size=2, unique=True))
    return Subsumption(Atomic(lhs), Atomic(rhs))


@composite
def music_kbs(draw: DrawFn, base: KnowledgeBase) -> KnowledgeBase:
    """`base` plus up to three random facts or inclusions over its names."""
    return base.extended(draw(st.lists(music_axioms(), max_size=3)))


# MusicGroup is subsumed by MusicArtist, so it has to come first in a case.
_ARM_ORDER = ("MusicGroup", "Song", "RadioStation", "MusicArtist")


@composite
def music_concept_types(draw: DrawFn) -> Type:
    c = draw(st.sampled_from(QUERIES + tuple(Nominal(o) for o in MUSIC_OBJECTS)))
    return Concept(c)


@composite
def type_pairs(draw: DrawFn, depth: int = 2) -> Tuple[Type, Type]:
    """Two types of the same shape, so lub and glb are both defined."""
    shapes = ["concept", "bool", "string"]
    if depth > 0:
        shapes += ["list", "func"]
    shape = draw(st.sampled_from(shapes))
    if shape == "concept":
        return draw(music_concept_types()), draw(music_concept_types())
    if shape == "bool":
        return BOOL, BOOL
    if shape == "string":
        return STRING, STRING
    if shape == "list":
        s, t = draw(type_pairs(depth - 1))
        return ListType(s), ListType(t)
    (s1, s2), (t1, t2) = draw(type_pairs(depth - 1)), draw(type_pairs(depth - 1))
    return Func(s1, t1), Func(s2, t2)


# ---- Closed, well-typed programs over the music knowledge base ----


def _objects_lit() -> st.SearchStrategy[Term]:
    return st.sampled_from(MUSIC_OBJECTS).map(lambda o: Lit(Object(o)))


@composite
def object_terms(draw: DrawFn, depth: int = 2) -> Term:
    """Terms of some concept type."""
    if depth <= 0:
        return draw(_objects_lit())
    kind = draw(st.sampled_from(("lit", "head-query", "head-proj", "if", "let")))
    if kind == "lit":
        return draw(_objects_lit())
    if kind == "head-query":
        return Head(Query(draw(st.sampled_from(QUERIES))))
    if kind == "head-proj":
        return Head(Proj(draw(object_terms(depth - 1)), draw(st.sampled_from(MUSIC_ROLES))))
    if kind == "if":
        return If(draw(bool_terms(depth - 1)), draw(object_terms(depth - 1)), draw(object_terms(depth - 1)))
    return Let("v", draw(object_terms(depth - 1)), Var("v"))


@composite
def string_terms(draw: DrawFn, depth: int = 2) -> Term:
    if depth <= 0 or draw(st.booleans()):
        return Lit(PrimV(draw(st.sampled_from(("Jimmy Hendrix", "The Beatles", "")))))
    return Head(Proj(draw(object_terms(depth - 1)), AtomicRole("artistName")))


@composite
def object_list_terms(draw: DrawFn, depth: int = 2) -> Term:
    if depth <= 0:
        return Query(draw(st.sampled_from(QUERIES)))
    kind = draw(st.sampled_from(("query", "proj", "cons", "tail", "nil")))
    if kind == "query":
        return Query(draw(st.sampled_from(QUERIES)))
    if kind == "proj":
        return Proj(draw(object_terms(depth - 1)), draw(st.sampled_from(MUSIC_ROLES)))
    if kind == "cons":
        return Cons(draw(object_terms(depth - 1)), draw(object_list_terms(depth - 1)))
    if kind == "tail":
        return Tail(draw(object_list_terms(depth - 1)))
    return Lit(Nil(Concept(Atomic(draw(st.sampled_from(MUSIC_CONCEPTS))))))


@composite
def bool_terms(draw: DrawFn, depth: int = 2) -> Term:
    if depth <= 0:
        return Lit(draw(st.sampled_from((TRUE, FALSE))))
    kind = draw(st.sampled_from(("lit", "null", "eq-obj", "eq-str", "if", "case")))
    if kind == "lit":
        return Lit(draw(st.sampled_from((TRUE, FALSE))))
    if kind == "null":
        return Null(draw(object_list_terms(depth - 1)))
    if kind == "eq-obj":
        return Eq(draw(object_terms(depth - 1)), draw(object_terms(depth - 1)))
    if kind == "eq-str":
        return Eq(draw(string_terms(depth - 1)), draw(string_terms(depth - 1)))
    if kind == "if":
        return If(draw(bool_terms(depth - 1)), draw(bool_terms(depth - 1)), draw(bool_terms(depth - 1)))
    names: List[str] = draw(st.lists(st.sampled_from(_ARM_ORDER), min_size=1, max_size=2, unique=True))
    names.sort(key=_ARM_ORDER.index)
    arms = tuple(
        CaseArm(Atomic(n), "y", Eq(Var("y"), draw(_objects_lit())))
        for n in names
    )
    return Case(draw(object_terms(depth - 1)), arms, draw(bool_terms(depth - 1)))


@composite
def applications(draw: DrawFn, kb: KnowledgeBase, reasoner: Optional[Reasoner] = None) -> Term:
    """A closure applied to an object term, annotated with the argument's type."""
    arg = draw(object_terms(1))
    try:
        annot = typecheck(kb, None, arg, reasoner=reasoner)
    except (TypingError, ResourceLimit):
        annot = Concept(TOP)
    kind = draw(st.sampled_from(("proj", "eq", "case")))
    if kind == "proj":
        body: Term = Proj(Var("x"), draw(st.sampled_from(MUSIC_ROLES)))
    elif kind == "eq":
        body = Eq(Var("x"), draw(_objects_lit()))
    else:
        arm = CaseArm(Atomic(draw(st.sampled_from(MUSIC_CONCEPTS))), "y", Eq(Var("y"), Var("x")))
        body = Case(Var("x"), (arm,), Lit(FALSE))
    return App(Lit(Closure("x", annot, body)), arg)


@composite
def recursions(draw: DrawFn) -> Term:
    """letrec all_seen : Top list -> bool walking a list to its end."""
    lst = ListType(Concept(TOP))
    fn = Func(lst, BOOL)
    inner = Closure("l", lst, If(Null(Var("l")), Lit(TRUE), App(Var("self"), Tail(Var("l")))))
    return App(Fix(Lit(Closure("self", fn, Lit(inner)))), draw(object_list_terms(1)))


@composite
def well_typed_terms(draw: DrawFn, kb: KnowledgeBase, reasoner: Optional[Reasoner] = None) -> Term:
    return draw(
        st.one_of(
            object_terms(),
            bool_terms(),
            string_terms(),
            object_list_terms(),
            applications(kb, reasoner),
            recursions(),
        )
    )


# ---- Closed programs over an arbitrary knowledge base ----


def signature_concepts(kb: KnowledgeBase) -> st.SearchStrategy[ConceptExpr]:
    """Concepts over the names `kb` already uses, so they are well formed."""
    sig = kb.signature
    leaves = [st.just(TOP)]
    if sig.concepts:
        leaves.append(st.sampled_from(sorted(sig.concepts)).map(Atomic))
    if sig.objects:
        leaves.append(st.sampled_from(sorted(sig.objects)).map(Nominal))
    kb_roles = sorted(sig.roles)

    def extend(inner: st.SearchStrategy[ConceptExpr]) -> st.SearchStrategy[ConceptExpr]:
        forms = [inner.map(Not), st.builds(And, inner, inner), st.builds(Or, inner, inner)]
        if kb_roles:
            role = st.sampled_from(kb_roles).map(AtomicRole)
            forms.append(st.builds(Exists, role, inner))
        return st.one_of(*forms)

    return st.recursive(st.one_of(*leaves), extend, max_leaves=3)


@composite
def kb_object_terms(draw: DrawFn, kb: KnowledgeBase, depth: int = 2) -> Term:
    objs = sorted(kb.objects)
    if objs and (depth <= 0 or draw(st.booleans())):
        return Lit(Object(draw(st.sampled_from(objs))))
    if depth <= 0 or draw(st.booleans()):
        return Head(Query(draw(signature_concepts(kb))))
    return If(draw(kb_bool_terms(kb, depth - 1)), draw(kb_object_terms(kb, depth - 1)), draw(kb_object_terms(kb, depth - 1)))


@composite
def kb_list_terms(draw: DrawFn, kb: KnowledgeBase, depth: int = 2) -> Term:
    kb_roles = sorted(kb.signature.roles)
    if depth <= 0:
        return Query(draw(signature_concepts(kb)))
    kind = draw(st.sampled_from(("query", "proj", "cons", "tail")))
    if kind == "proj" and kb_roles:
        return Proj(draw(kb_object_terms(kb, depth - 1)), AtomicRole(draw(st.sampled_from(kb_roles))))
    if kind == "cons":
        return Cons(draw(kb_object_terms(kb, depth - 1)), draw(kb_list_terms(kb, depth - 1)))
    if kind == "tail":
        return Tail(draw(kb_list_terms(kb, depth - 1)))
    return Query(draw(signature_concepts(kb)))


@composite
def kb_bool_terms(draw: DrawFn, kb: KnowledgeBase, depth: int = 2) -> Term:
    if depth <= 0:
        return Lit(draw(st.sampled_from((TRUE, FALSE))))
    kind = draw(st.sampled_from(("null", "eq", "case")))
    if kind == "null":
        return Null(draw(kb_list_terms(kb, depth - 1)))
    if kind == "eq":
        return Eq(draw(kb_object_terms(kb, depth - 1)), draw(kb_object_terms(kb, depth - 1)))
    arm = CaseArm(draw(signature_concepts(kb)), "y", Eq(Var("y"), draw(kb_object_terms(kb, 0))))
    return Case(draw(kb_object_terms(kb, depth - 1)), (arm,), draw(kb_bool_terms(kb, depth - 1)))


def kb_terms(kb: KnowledgeBase) -> st.SearchStrategy[Term]:
    """Closed programs built from `kb`'s own names; most of them typecheck."""
    return st.one_of(kb_object_terms(kb), kb_list_terms(kb), kb_bool_terms(kb))
