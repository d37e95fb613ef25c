from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class Diagnostic(BaseModel):
    rule: str
    kind: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None


class CheckRequest(BaseModel):
    kb: str = ""
    program: str


class CheckResponse(BaseModel):
    ok: bool
    type: Optional[str] = None
    diagnostics: List[Diagnostic] = Field(default_factory=list)
    kb_fingerprint: str


class RunRequest(BaseModel):
    kb: str = ""
    program: str
    step_limit: Optional[int] = Field(default=None, gt=0)


class RunResponse(BaseModel):
    ok: bool
    code: int                      # the CLI exit code for the same outcome
    type: Optional[str] = None
    value: Optional[str] = None
    stuck: Optional[str] = None
    steps: Optional[int] = None
    error: Optional[str] = None
    diagnostics: List[Diagnostic] = Field(default_factory=list)
    kb_fingerprint: str


class QueryRequest(BaseModel):
    kb: str
    concept: str


class QueryResponse(BaseModel):
    ok: bool = True
    satisfiable: bool
    objects: List[str] = Field(default_factory=list)
    kb_fingerprint: str


class EntailsRequest(BaseModel):
    kb: str
    axiom: str


class EntailsResponse(BaseModel):
    ok: bool = True
    entailed: bool
    axiom: str
    kb_fingerprint: str
