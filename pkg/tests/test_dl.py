from __future__ import annotations

import pytest
from hypothesis import given

from lambdadl.dl.axioms import ConceptEquality, DataAssertion, ObjectEquivalence, RoleAssertion, Subsumption
from lambdadl.dl.concepts import (
    And,
    Atomic,
    AtomicRole,
    Datatype,
    Exists,
    Forall,
    Inverse,
    Nominal,
    Not,
    PrimTag,
    complement,
    is_nnf,
    negation_normal_form,
)
from lambdadl.dl.lexer import tokenize
from lambdadl.dl.parser import parse_axiom, parse_concept, parse_kb, parse_role
from lambdadl.dl.serialize import render_concept, serialize_kb
from lambdadl.errors import ParseError, SemanticError

from .strategies import concepts, interpretations, small_kbs


def test_concept_precedence():
    c = parse_concept("!A & exists r^-.B | {a}")
    assert c == parse_concept("((!A) & (exists r^-.B)) | {a}")
    assert isinstance(c.right, Nominal)


def test_double_inverse_collapses():
    assert parse_role("r^-^-") == AtomicRole("r")
    assert Inverse(Inverse(AtomicRole("r"))) == AtomicRole("r")


def test_music_kb_signature(music_kb):
    sig = music_kb.signature
    assert "artistName" in sig.data_roles
    assert "recorded" in sig.roles
    assert sig.objects == {"beatles", "coolFm", "hendrix", "machineGun"}
    assert music_kb.data_range("artistName") is PrimTag.STRING


def test_summary_shape(music_kb):
    s = music_kb.summary()
    assert isinstance(s.get("fingerprint"), str) and len(s["fingerprint"]) == 12
    assert s["objects"] == 4
    assert s["data_roles"] == 1


def test_equality_ignores_order():
    k1 = parse_kb("A sub B\nB sub C\na : A")
    k2 = parse_kb("a : A\nB sub C\nA sub B")
    assert k1 == k2
    assert k1.fingerprint() != parse_kb("A sub B").fingerprint()
    # Only axiom order is ignored; operands keep theirs.
    assert parse_concept("A & B") != parse_concept("B & A")
    assert parse_kb("a : A & B") != parse_kb("a : B & A")


def test_axiom_forms():
    assert parse_axiom("(a, b) : r") == RoleAssertion("a", "b", AtomicRole("r"))
    assert parse_axiom('(a, "x") : name') == DataAssertion("a", "name", "x")
    assert parse_axiom("(a, true) : flag") == DataAssertion("a", "flag", True)
    assert parse_axiom("a == b") == ObjectEquivalence("a", "b")
    assert isinstance(parse_axiom("A equiv B"), ConceptEquality)
    assert parse_axiom("Range(r, A)") == Subsumption(parse_concept("Top"), Forall(AtomicRole("r"), Atomic("A")))
    assert parse_axiom("Domain(r, A)") == Subsumption(Exists(AtomicRole("r"), parse_concept("Top")), Atomic("A"))


def test_equiv_is_stored_as_two_inclusions():
    kb = parse_kb("A equiv B")
    assert set(kb.tbox) == {Subsumption(Atomic("A"), Atomic("B")), Subsumption(Atomic("B"), Atomic("A"))}


def test_comments_and_semicolons():
    kb = parse_kb("// header\nA sub B; // trailing\n;a : A\n")
    assert len(kb.axioms) == 2


def test_parse_error_has_position():
    with pytest.raises(ParseError) as ei:
        parse_kb("A sub B\nA sub & C")
    assert ei.value.line == 2
    assert ei.value.column > 0


def test_literal_needs_plain_role():
    with pytest.raises(ParseError):
        parse_kb('(a, "x") : r^-')


@pytest.mark.parametrize(
    "text, rule_id",
    [
        ("A sub B\nx : A\n(x, A) : r", "kb.name_kinds"),
        ('(a, "x") : name\n(a, b) : name', "kb.data_role_usage"),
        ('(a, "x") : name\nexists name^-.Top sub A', "kb.data_role_usage"),
        ("A sub xsd:string", "kb.datatype_placement"),
    ],
)
def test_validation_rule_ids(text, rule_id):
    with pytest.raises(SemanticError) as ei:
        parse_kb(text)
    assert any(v.startswith(rule_id + ":") for v in ei.value.violations)


def test_datatype_filler_is_accepted():
    kb = parse_kb("Range(name, xsd:string)\nA sub exists name.xsd:string")
    assert kb.is_data_role("name")
    assert kb.data_range("name") is PrimTag.STRING


def test_nnf_pushes_negation_inward():
    c = negation_normal_form(Not(And(Atomic("A"), Exists(AtomicRole("r"), Not(Atomic("B"))))))
    assert render_concept(c) == "!A | forall r.B"
    assert complement(Datatype(PrimTag.BOOL)) == Not(Datatype(PrimTag.BOOL))


def test_unicode_rendering():
    c = parse_concept("MusicArtist & exists recorded^-.{hendrix}")
    assert render_concept(c, unicode=True) == "MusicArtist ⊓ ∃recorded⁻.{hendrix}"


@given(concepts())
def test_nnf_is_nnf_and_idempotent(c):
    n = negation_normal_form(c)
    assert is_nnf(n)
    assert negation_normal_form(n) == n


@given(concepts(), interpretations())
def test_nnf_preserves_extension(c, interp):
    assert interp.extension(negation_normal_form(c)) == interp.extension(c)
    assert interp.extension(complement(c)) == interp.universe - interp.extension(c)


@given(concepts())
def test_render_parses_back(c):
    assert parse_concept(render_concept(c)) == c


@given(small_kbs())
def test_serialized_kb_parses_back(kb):
    again = parse_kb(serialize_kb(kb))
    assert again == kb
    assert again.fingerprint() == kb.fingerprint()


def test_keywords_lex_as_identifiers():
    # Keywords are recognised by the parsers; glyphs fold into their ASCII spelling.
    glyphs = [(t.kind, t.value) for t in tokenize("∃r⁻.⊤ ⊑ Song")]
    ascii_ = [(t.kind, t.value) for t in tokenize("exists r^-.Top sub Song")]
    assert glyphs == ascii_
    assert glyphs == [
        ("ident", "exists"),
        ("ident", "r"),
        ("sym", "^-"),
        ("sym", "."),
        ("ident", "Top"),
        ("ident", "sub"),
        ("ident", "Song"),
        ("eof", ""),
    ]
