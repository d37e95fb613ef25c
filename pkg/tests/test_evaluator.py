from __future__ import annotations

import io
import json

import pytest

from lambdadl.config import EvalConfig
from lambdadl.dl.concepts import Atomic, AtomicRole, Exists, Inverse, Nominal
from lambdadl.errors import EvaluationError, StepLimitExceeded
from lambdadl.evaluator import (
    Done,
    EvalTrace,
    Stepped,
    StuckKind,
    StuckReport,
    evaluate,
    materialize_projection,
    materialize_query,
    step,
)
from lambdadl.events import events
from lambdadl.syntax.parser import parse_term
from lambdadl.syntax.printer import show_value
from lambdadl.syntax.terms import FALSE, TRUE, ConsV, Nil, Object, PrimV, Var, list_items
from lambdadl.syntax.types import STRING, Concept

from .conftest import sample

CFG = EvalConfig(step_limit=10_000)


def _parse(kb, text):
    return parse_term(text, kb.objects)


def _run(kb, text, cfg=CFG, trace=None):
    return evaluate(kb, _parse(kb, text), cfg, trace=trace)


def _program(name: str) -> str:
    return sample(name).read_text(encoding="utf-8")


def _traced(kb, text, cfg=CFG):
    buf = io.StringIO()
    trace = EvalTrace(stream=buf)
    out = _run(kb, text, cfg, trace)
    return out, trace, buf.getvalue().splitlines()


# ---- Whole programs ----


def test_query_materializes_named_instances(music_kb):
    v = _run(music_kb, _program("query.ldl"))
    assert list_items(v) == [Object("beatles"), Object("hendrix")]


def test_recorded_songs(music_kb):
    v = _run(music_kb, _program("mapping_songs.ldl"))
    assert show_value(v) == "cons machineGun nil"


def test_artist_name(music_kb):
    assert _run(music_kb, _program("mapping_name.ldl")) == PrimV("Jimmy Hendrix")


@pytest.mark.parametrize("name", ["get_influences.ldl", "artist_influences.ldl"])
def test_influence_names(music_kb, name):
    v = _run(music_kb, _program(name))
    assert show_value(v) == 'cons "The Beatles" nil'


def test_head_of_empty_projection_is_stuck(music_kb):
    out = _run(music_kb, _program("stuck.ldl"))
    assert isinstance(out, StuckReport)
    assert out.kind is StuckKind.HEAD_NIL
    assert out.steps == 1
    assert "StuckHeadNil" in out.message()
    ev = events.list(event="eval.stuck")
    assert ev and ev[-1].get("kind") == "StuckHeadNil"


def test_tail_of_nil_is_stuck(music_kb):
    out = _run(music_kb, "tail (tail (cons hendrix nil[Song]))")
    assert isinstance(out, StuckReport)
    assert out.kind is StuckKind.TAIL_NIL


def test_recursion_through_fix(music_kb):
    text = (
        "letrec walk : Top list -> bool = fun(l: Top list). "
        "if null l then true else walk (tail l) in walk (query Top)"
    )
    out, trace, _ = _traced(music_kb, text)
    assert out == TRUE
    assert "E-FIXV" in trace.rules()
    # one E-TAILV per named object
    assert trace.rules().count("E-TAILV") == 4


def test_step_limit(music_kb):
    text = "letrec loop : bool -> bool = fun(b: bool). loop b in loop true"
    with pytest.raises(StepLimitExceeded) as ei:
        _run(music_kb, text, EvalConfig(step_limit=50))
    assert ei.value.steps == 50
    assert events.list(event="eval.step_limit")


def test_step_limit_must_be_positive():
    with pytest.raises(ValueError):
        EvalConfig(step_limit=0)


# ---- Single steps ----


def test_congruence_is_reported_outside_in(music_kb):
    out = step(music_kb, _parse(music_kb, "head (hendrix.recorded)"))
    assert isinstance(out, Stepped)
    assert out.rule == "E-PROJV"
    assert out.via == ("E-HEAD",)
    nested = step(music_kb, _parse(music_kb, "null (tail (hendrix.recorded))"))
    assert nested.via == ("E-NULL", "E-TAIL")


def test_values_are_done(music_kb):
    assert step(music_kb, _parse(music_kb, "hendrix")) == Done(Object("hendrix"))
    assert isinstance(step(music_kb, _parse(music_kb, "fun(x: Song). x")), Done)


def test_free_variable_is_an_error(music_kb):
    with pytest.raises(EvaluationError):
        step(music_kb, Var("x"))


def test_let_and_equivalence(music_kb):
    out, trace, _ = _traced(music_kb, "let x = hendrix in x = beatles")
    assert out == FALSE
    assert trace.rules() == ["E-LETV", "EQ-NOMINAL-FALSE"]
    assert _run(music_kb, '"a" = "a"') == TRUE


def test_dispatch_tries_arms_in_order(music_kb):
    text = 'case beatles of | type Song as s -> "song" | type MusicArtist as a -> "artist" | default "other"'
    out, trace, _ = _traced(music_kb, text)
    assert out == PrimV("artist")
    assert trace.rules() == ["E-DISPATCH-FAIL", "E-DISPATCH-SUCC"]


def test_dispatch_is_open_world(music_kb):
    # beatles have no known influence, so neither this arm nor its negation matches
    text = "case beatles of | type exists influencedBy.Top as x -> true | default false"
    out, trace, _ = _traced(music_kb, text)
    assert out == FALSE
    assert trace.rules() == ["E-DISPATCH-FAIL", "E-DISPATCH-DEF"]


def test_dispatch_binds_the_object(music_kb):
    assert _run(music_kb, "case hendrix of | type MusicArtist as a -> a.recorded | default nil[Song]") == ConsV(
        Object("machineGun"), Nil(Concept(Exists(Inverse(AtomicRole("recorded")), Nominal("hendrix"))))
    )


# ---- Materialization ----


def test_materialized_lists_carry_their_element_type(music_kb):
    station = Concept(Atomic("RadioStation"))
    assert materialize_query(music_kb, Atomic("RadioStation"), station) == ConsV(Object("coolFm"), Nil(station))
    v = _run(music_kb, "beatles.recorded")
    assert v == Nil(Concept(Exists(Inverse(AtomicRole("recorded")), Nominal("beatles"))))
    assert _run(music_kb, "coolFm.artistName") == Nil(STRING)


def test_data_role_has_no_inverse(music_kb):
    with pytest.raises(EvaluationError):
        materialize_projection(music_kb, "hendrix", Inverse(AtomicRole("artistName")), STRING)


# ---- Trace ----


def test_trace_lines_parse_back(music_kb):
    out, trace, lines = _traced(music_kb, _program("mapping_songs.ldl"))
    assert len(trace) == len(lines)
    assert lines[0].startswith("0: ")
    assert "  // " not in lines[0]
    for i, line in enumerate(lines):
        index, _, text = line.partition(": ")
        assert int(index) == i
        # the fired rule is a comment, so the whole line parses
        parse_term(text, music_kb.objects)
    assert lines[-1].endswith("// E-PROJV")
    assert show_value(out) == "cons machineGun nil"


def test_trace_jsonl(music_kb, tmp_path):
    path = tmp_path / "trace.jsonl"
    trace = EvalTrace(stream=io.StringIO(), jsonl_path=str(path))
    _run(music_kb, "let x = hendrix in x = hendrix", trace=trace)
    rows = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert [r.get("rule") for r in rows] == [None, "E-LETV", "EQ-NOMINAL-TRUE"]
    assert trace.list(limit=1)[0].get("term") == "true"
