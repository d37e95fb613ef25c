from __future__ import annotations

import pytest
from hypothesis import assume, event, given, reject

from lambdadl.config import BudgetConfig, OracleConfig
from lambdadl.dl.axioms import ConceptAssertion, ObjectEquivalence, RoleAssertion, Subsumption
from lambdadl.dl.concepts import BOTTOM, TOP, And, Atomic, AtomicRole, Forall, Inverse, Nominal, Not, Or
from lambdadl.dl.parser import parse_axiom, parse_concept, parse_kb
from lambdadl.errors import ResourceLimit, SemanticError
from lambdadl.events import events
from lambdadl.reasoner import Reasoner, TableauReasoner, find_countermodel, reasoner_for
from lambdadl.reasoner.cache import EntailmentCache
from lambdadl.reasoner.tableau import TBoxIndex

from .strategies import assertions, concepts, objects, roles, small_kbs

ORACLE = OracleConfig(max_size=4)
# Node count only: the deadline is out of reach.
BUDGET = BudgetConfig(node_budget=100_000, time_budget_ms=3_600_000)


def test_music_queries(music_kb):
    r = reasoner_for(music_kb)
    assert r.is_consistent()
    assert r.query_instances(parse_concept("MusicArtist & exists recorded.Song")) == ["beatles", "hendrix"]
    assert r.query_instances(parse_concept("RadioStation")) == ["coolFm"]
    assert r.query_instances(parse_concept("exists influencedBy.Top")) == ["hendrix"]
    # hendrix recorded a song, so he is an artist without being asserted one
    assert r.is_instance("hendrix", Atomic("MusicArtist"))
    assert r.is_instance("beatles", parse_concept("exists recorded.Song"))


def test_open_world_excludes_unknowns(music_kb):
    r = reasoner_for(music_kb)
    # Nobody is known to lack an influence.
    assert r.query_instances(parse_concept("!exists influencedBy.Top")) == []
    assert not r.is_instance("beatles", parse_concept("exists influencedBy.Top"))
    assert not r.is_instance("beatles", parse_concept("!exists influencedBy.Top"))


def test_role_and_data_successors(music_kb):
    r = reasoner_for(music_kb)
    assert r.query_role_successors("hendrix", AtomicRole("recorded")) == ["machineGun"]
    assert r.query_role_successors("machineGun", Inverse(AtomicRole("recorded"))) == ["hendrix"]
    assert r.query_role_successors("coolFm", Inverse(AtomicRole("playedAt"))) == ["beatles", "hendrix"]
    assert r.query_data_successors("hendrix", "artistName") == ["Jimmy Hendrix"]
    assert r.query_data_successors("coolFm", "artistName") == []


def test_role_kinds_are_checked(music_kb):
    r = reasoner_for(music_kb)
    with pytest.raises(SemanticError):
        r.query_role_successors("hendrix", AtomicRole("artistName"))
    with pytest.raises(SemanticError):
        r.query_data_successors("hendrix", "recorded")


def test_subsumption_through_tbox(music_kb):
    r = reasoner_for(music_kb)
    assert r.is_subsumed(Atomic("MusicGroup"), Atomic("MusicArtist"))
    assert r.is_subsumed(parse_concept("exists recorded.Song"), parse_concept("exists artistName.Top"))
    assert not r.is_subsumed(Atomic("MusicArtist"), Atomic("MusicGroup"))


def test_objects_are_not_unique_names(music_kb):
    r = reasoner_for(music_kb)
    assert not r.are_equivalent_objects("hendrix", "beatles")
    assert r.is_satisfiable(parse_concept("{hendrix} & {beatles}"))
    assert r.are_equivalent_objects("hendrix", "hendrix")


def test_entails_covers_every_axiom_kind(music_kb):
    r = reasoner_for(music_kb)
    assert r.entails(parse_axiom("beatles : MusicArtist"))
    assert r.entails(parse_axiom("(hendrix, machineGun) : recorded"))
    assert r.entails(parse_axiom("(machineGun, hendrix) : recorded^-"))
    assert r.entails(parse_axiom('(hendrix, "Jimmy Hendrix") : artistName'))
    assert not r.entails(parse_axiom('(hendrix, "The Beatles") : artistName'))
    assert not r.entails(parse_axiom("hendrix == beatles"))
    assert r.entails(parse_axiom("MusicGroup & MusicArtist equiv MusicGroup"))


def test_infinite_model_is_still_decided(infinite_kb):
    r = reasoner_for(infinite_kb)
    assert r.is_consistent()
    assert r.query_instances(Atomic("Person")) == ["someone"]
    assert r.is_subsumed(Atomic("Person"), parse_concept("exists hasFather.exists hasFather.Top"))


def test_inconsistent_kb_entails_everything():
    kb = parse_kb("A sub Bot\na : A")
    r = reasoner_for(kb)
    assert not r.is_consistent()
    assert r.entails(Subsumption(TOP, BOTTOM))
    assert r.query_instances(Atomic("A")) == ["a"]


def test_unsatisfiable_query_is_empty():
    kb = parse_kb("A sub !B\na : A")
    r = reasoner_for(kb)
    assert r.query_instances(parse_concept("A & B")) == []


def test_cache_answers_match_recomputation(music_kb):
    r = Reasoner(TableauReasoner(music_kb))
    c = parse_concept("MusicArtist & exists recorded.Song")
    first = r.is_satisfiable(c)
    # Same question in a different but equivalent spelling.
    again = r.is_satisfiable(parse_concept("!(!MusicArtist | forall recorded.!Song)"))
    assert first is again is True
    snap = r.snapshot().get("cache") or {}
    assert snap.get("hits") == 1
    assert snap.get("entries") == 1


def test_registry_shares_reasoners(music_kb):
    budget = BudgetConfig()
    assert reasoner_for(music_kb, budget) is reasoner_for(music_kb, budget)
    assert reasoner_for(music_kb, budget) is not reasoner_for(music_kb, BudgetConfig(node_budget=7))


def test_budget_exhaustion_raises(music_kb):
    r = reasoner_for(music_kb, BudgetConfig(node_budget=1))
    with pytest.raises(ResourceLimit) as ei:
        r.is_consistent()
    assert ei.value.budget.get("node_budget") == 1
    assert events.list(event="reasoner.budget_exceeded")
    # Exhaustion is not cached as an answer.
    with pytest.raises(ResourceLimit):
        r.is_consistent()


def test_countermodel_for_non_entailment(music_kb):
    model = find_countermodel(music_kb, Subsumption(Atomic("MusicArtist"), Atomic("MusicGroup")), cfg=ORACLE)
    assert model is not None
    assert model.is_model_of(music_kb)
    assert not model.satisfies(Subsumption(Atomic("MusicArtist"), Atomic("MusicGroup")))


def test_no_countermodel_for_entailment(music_kb):
    goal = ConceptAssertion("beatles", parse_concept("exists recorded.Song"))
    assert find_countermodel(music_kb, goal, cfg=ORACLE) is None


def test_countermodel_size_is_bounded():
    with pytest.raises(ValueError):
        find_countermodel(parse_kb("A sub B"), Subsumption(Atomic("B"), Atomic("A")), max_size=9, cfg=ORACLE)


def test_cache_evicts_least_recently_used():
    cache = EntailmentCache(keep=2)
    cache.put("a", True)
    cache.put("b", False)
    assert cache.get("a") is True
    cache.put("c", True)
    # "b" was the least recently touched
    assert cache.get("b") is None
    assert cache.get("a") is True
    assert cache.snapshot() == {"entries": 2, "hits": 2, "misses": 1, "evictions": 1}
    cache.clear()
    assert cache.snapshot() == {"entries": 0, "hits": 0, "misses": 0, "evictions": 0}


def test_cache_needs_room():
    with pytest.raises(ValueError):
        EntailmentCache(keep=0)


def test_absorption_leaves_no_disjunctive_universals(music_kb):
    index = TBoxIndex.build(music_kb)
    assert not any(isinstance(c, Or) for c in index.universal)
    assert Forall(Inverse(AtomicRole("recorded")), Atomic("MusicArtist")) in index.unfold["Song"]


def test_absorbed_inclusions_still_entail():
    kb = parse_kb("exists r.A sub B\nA & C sub D\na : A\nb : C\n(b, a) : r")
    r = reasoner_for(kb, BUDGET)
    assert r.is_instance("b", Atomic("B"))
    assert not r.is_instance("a", Atomic("D"))
    assert r.is_subsumed(parse_concept("A & C"), Atomic("D"))
    assert r.is_subsumed(parse_concept("exists r.(A & C)"), parse_concept("B & exists r.D"))


# ---- Agreement with the finite-model oracle over random small KBs ----


def _undecided() -> None:
    event("reasoner budget exhausted")
    reject()


@given(small_kbs())
def test_finite_model_means_consistent(kb):
    model = find_countermodel(kb, Subsumption(TOP, BOTTOM), cfg=ORACLE)
    if model is not None:
        assert reasoner_for(kb, BUDGET).is_consistent()


@given(small_kbs(), concepts(3), concepts(3))
def test_entailed_subsumption_has_no_countermodel(kb, c, d):
    if reasoner_for(kb, BUDGET).is_subsumed(c, d):
        assert find_countermodel(kb, Subsumption(c, d), cfg=ORACLE) is None


@given(small_kbs(), concepts(3))
def test_satisfiability_agrees_with_small_models(kb, c):
    # A model where c is non-empty refutes c ⊑ ⊥.
    model = find_countermodel(kb, Subsumption(c, BOTTOM), cfg=ORACLE)
    if model is not None:
        assert reasoner_for(kb, BUDGET).is_satisfiable(c)


@given(small_kbs(), objects(), concepts(3))
def test_entailed_instance_has_no_countermodel(kb, a, c):
    if reasoner_for(kb, BUDGET).is_instance(a, c):
        assert find_countermodel(kb, ConceptAssertion(a, c), cfg=ORACLE) is None


@given(small_kbs(), objects(), objects(), roles())
def test_entailed_role_has_no_countermodel(kb, a, b, role):
    if reasoner_for(kb, BUDGET).entails_role(a, b, role):
        assert find_countermodel(kb, RoleAssertion(a, b, role), cfg=ORACLE) is None


@given(small_kbs(), objects(), objects())
def test_object_equivalence_agrees_with_small_models(kb, a, b):
    same = reasoner_for(kb, BUDGET).are_equivalent_objects(a, b)
    model = find_countermodel(kb, ObjectEquivalence(a, b), cfg=ORACLE)
    if same:
        assert model is None
    if model is not None:
        assert not same


# ---- Algebraic laws of the entailment services ----


@given(small_kbs(), assertions(), concepts(3))
def test_more_facts_never_lose_instances(kb, fact, c):
    bigger = kb.extended([fact])
    try:
        assume(reasoner_for(bigger, BUDGET).is_consistent())
        before = set(reasoner_for(kb, BUDGET).query_instances(c))
        after = set(reasoner_for(bigger, BUDGET).query_instances(c))
    except ResourceLimit:
        _undecided()
    assert before <= after


@given(small_kbs(), objects(), concepts(3))
def test_instance_is_nominal_subsumption(kb, a, c):
    r = reasoner_for(kb, BUDGET)
    assert r.is_instance(a, c) == r.is_subsumed(Nominal(a), c)


@given(small_kbs(), concepts(3), concepts(3))
def test_subsumption_is_unsatisfiable_difference(kb, c, d):
    r = reasoner_for(kb, BUDGET)
    assert r.is_subsumed(c, d) == (not r.is_satisfiable(And(c, Not(d))))


@given(small_kbs(), concepts(4))
def test_every_question_is_decided_within_budget(kb, c):
    # ResourceLimit here fails the test: these KBs are small enough to always decide.
    r = reasoner_for(kb, BUDGET)
    r.is_consistent()
    r.is_satisfiable(c)
    answers = r.query_instances(c)
    assert set(answers) <= kb.objects
    assert answers == sorted(answers)
