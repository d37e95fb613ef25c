from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from lambdadl.api import app

from .conftest import sample

MUSIC = sample("music.kb").read_text(encoding="utf-8")


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)


def _post(client: TestClient, path: str, payload: dict, status: int = 200) -> dict:
    r = client.post(path, json=payload)
    assert r.status_code == status, r.text
    return r.json()


def _program(name: str) -> str:
    return sample(name).read_text(encoding="utf-8")


def test_health_ok(client):
    j = client.get("/health").json()
    assert j.get("ok") is True
    assert j.get("service") == "lambdadl"


def test_check_contract(client):
    j = _post(client, "/v1/check", {"kb": MUSIC, "program": _program("query.ldl")})
    assert j.get("ok") is True
    assert j.get("type") == "(MusicArtist ⊓ ∃recorded.Song) list"
    assert j.get("diagnostics") == []
    fp = j.get("kb_fingerprint")
    assert isinstance(fp, str) and len(fp) == 12


def test_check_reports_rule(client):
    j = _post(client, "/v1/check", {"kb": MUSIC, "program": _program("rejected.ldl")})
    assert j.get("ok") is False
    diag = (j.get("diagnostics") or [{}])[0]
    assert diag.get("rule") == "S-CONCEPT"
    assert diag.get("kind") == "Mismatch"
    assert diag.get("line") == 3


def test_run_value(client):
    j = _post(client, "/v1/run", {"kb": MUSIC, "program": _program("get_influences.ldl")})
    assert j.get("ok") is True
    assert j.get("code") == 0
    assert j.get("type") == "string list"
    assert j.get("value") == 'cons "The Beatles" nil'


def test_run_stuck(client):
    j = _post(client, "/v1/run", {"kb": MUSIC, "program": _program("stuck.ldl")})
    assert j.get("ok") is False
    assert j.get("code") == 3
    assert j.get("stuck") == "StuckHeadNil"
    assert j.get("steps") == 1


def test_run_step_limit(client):
    loop = "letrec loop : bool -> bool = fun(b: bool). loop b in loop true"
    j = _post(client, "/v1/run", {"kb": MUSIC, "program": loop, "step_limit": 30})
    assert j.get("ok") is False
    assert j.get("code") == 4


def test_run_type_error(client):
    j = _post(client, "/v1/run", {"kb": MUSIC, "program": _program("subsumed_case.ldl")})
    assert j.get("code") == 1
    assert (j.get("diagnostics") or [{}])[0].get("kind") == "SubsumedCase"


def test_run_rejects_bad_step_limit(client):
    _post(client, "/v1/run", {"kb": MUSIC, "program": "true", "step_limit": 0}, status=422)


def test_query_contract(client):
    j = _post(client, "/v1/query", {"kb": MUSIC, "concept": "exists influencedBy.Top"})
    assert j == {"ok": True, "satisfiable": True, "objects": ["hendrix"], "kb_fingerprint": j["kb_fingerprint"]}
    j = _post(client, "/v1/query", {"kb": MUSIC, "concept": "Song & !Song"})
    assert j.get("satisfiable") is False
    assert j.get("objects") == []


def test_query_unknown_name(client):
    j = _post(client, "/v1/query", {"kb": MUSIC, "concept": "Singer"}, status=422)
    assert (j.get("detail") or {}).get("rule") == "WF-TYPE"


def test_entails_contract(client):
    j = _post(client, "/v1/entails", {"kb": MUSIC, "axiom": "MusicGroup sub exists artistName.Top"})
    assert j.get("entailed") is True
    assert j.get("axiom") == "MusicGroup ⊑ ∃artistName.⊤"
    j = _post(client, "/v1/entails", {"kb": MUSIC, "axiom": "hendrix == beatles"})
    assert j.get("entailed") is False


def test_parse_errors_are_422(client):
    j = _post(client, "/v1/check", {"kb": MUSIC, "program": "let x = in x"}, status=422)
    detail = j.get("detail") or {}
    assert (detail.get("line"), detail.get("column")) == (1, 9)
    j = _post(client, "/v1/check", {"kb": "A sub B\nx : A\n(x, A) : r", "program": "true"}, status=422)
    assert any(v.startswith("kb.name_kinds") for v in (j.get("detail") or {}).get("violations", []))


def test_fingerprint_tracks_the_kb(client):
    a = _post(client, "/v1/check", {"kb": MUSIC, "program": "true"})
    b = _post(client, "/v1/check", {"kb": MUSIC + "\nextra : Song\n", "program": "true"})
    assert a.get("kb_fingerprint") != b.get("kb_fingerprint")
