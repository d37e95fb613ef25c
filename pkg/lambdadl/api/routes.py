from __future__ import annotations

import dataclasses

from fastapi import APIRouter, HTTPException

from lambdadl.api.contracts import (
    CheckRequest,
    CheckResponse,
    Diagnostic,
    EntailsRequest,
    EntailsResponse,
    QueryRequest,
    QueryResponse,
    RunRequest,
    RunResponse,
)
from lambdadl.checker.typecheck import TypeChecker
from lambdadl.cli.main import ExitCode
from lambdadl.cli.session import Session, load_kb_text
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.dl.parser import parse_axiom, parse_concept
from lambdadl.dl.serialize import render_axiom
from lambdadl.errors import (
    EvaluationError,
    ParseError,
    ResourceLimit,
    SemanticError,
    StepLimitExceeded,
    TypingError,
)
from lambdadl.evaluator.outcomes import StuckReport
from lambdadl.syntax.printer import show_type, show_value

router = APIRouter(prefix="/v1", tags=["lambdadl"])


def _parse_failure(e: Exception) -> HTTPException:
    if isinstance(e, ParseError):
        return HTTPException(status_code=422, detail={"error": e.message, "line": e.line, "column": e.column})
    if isinstance(e, SemanticError):
        return HTTPException(status_code=422, detail={"error": e.message, "violations": e.violations})
    return HTTPException(status_code=422, detail={"error": str(e)})


def _budget_failure(e: ResourceLimit) -> HTTPException:
    return HTTPException(status_code=503, detail={"error": e.message, "budget": e.budget})


def _kb(text: str) -> KnowledgeBase:
    try:
        return load_kb_text(text, source="http")
    except (ParseError, SemanticError) as e:
        raise _parse_failure(e)


def _diagnostic(e: TypingError) -> Diagnostic:
    return Diagnostic(
        rule=e.rule,
        kind=e.kind.value,
        message=e.message,
        line=e.span.line if e.span else None,
        column=e.span.column if e.span else None,
    )


@router.post("/check")
def check(req: CheckRequest):
    s = Session(kb=_kb(req.kb))
    try:
        t = s.parse(req.program)
    except ParseError as e:
        raise _parse_failure(e)
    try:
        ty = s.check(t)
    except TypingError as e:
        return CheckResponse(ok=False, diagnostics=[_diagnostic(e)], kb_fingerprint=s.kb.fingerprint()).model_dump()
    except ResourceLimit as e:
        raise _budget_failure(e)
    return CheckResponse(ok=True, type=show_type(ty, unicode=True), kb_fingerprint=s.kb.fingerprint()).model_dump()


@router.post("/run")
def run(req: RunRequest):
    s = Session(kb=_kb(req.kb))
    if req.step_limit is not None:
        s.cfg = dataclasses.replace(s.cfg, step_limit=req.step_limit)
    fp = s.kb.fingerprint()
    try:
        t = s.parse(req.program)
    except ParseError as e:
        raise _parse_failure(e)
    try:
        ty, out = s.run(t)
    except TypingError as e:
        return RunResponse(ok=False, code=int(ExitCode.TYPE_ERROR), diagnostics=[_diagnostic(e)], kb_fingerprint=fp).model_dump()
    except StepLimitExceeded as e:
        return RunResponse(ok=False, code=int(ExitCode.STEP_LIMIT), error=str(e), kb_fingerprint=fp).model_dump()
    except ResourceLimit as e:
        return RunResponse(ok=False, code=int(ExitCode.BUDGET), error=e.message, kb_fingerprint=fp).model_dump()
    except EvaluationError as e:
        return RunResponse(ok=False, code=int(ExitCode.STUCK), error=e.message, kb_fingerprint=fp).model_dump()

    shown = show_type(ty, unicode=True)
    if isinstance(out, StuckReport):
        return RunResponse(
            ok=False,
            code=int(ExitCode.STUCK),
            type=shown,
            stuck=out.kind.value,
            steps=out.steps,
            error=out.message(),
            kb_fingerprint=fp,
        ).model_dump()
    return RunResponse(ok=True, code=int(ExitCode.OK), type=shown, value=show_value(out, unicode=True), kb_fingerprint=fp).model_dump()


@router.post("/query")
def query(req: QueryRequest):
    s = Session(kb=_kb(req.kb))
    try:
        c = parse_concept(req.concept)
    except ParseError as e:
        raise _parse_failure(e)
    try:
        TypeChecker(s.kb, reasoner=s.reasoner).check_concept(c)
        satisfiable = s.reasoner.is_satisfiable(c)
        objects = s.reasoner.query_instances(c) if satisfiable else []
    except TypingError as e:
        raise HTTPException(status_code=422, detail={"error": e.message, "rule": e.rule})
    except ResourceLimit as e:
        raise _budget_failure(e)
    return QueryResponse(satisfiable=satisfiable, objects=objects, kb_fingerprint=s.kb.fingerprint()).model_dump()


@router.post("/entails")
def entails(req: EntailsRequest):
    s = Session(kb=_kb(req.kb))
    try:
        ax = parse_axiom(req.axiom)
    except ParseError as e:
        raise _parse_failure(e)
    try:
        entailed = s.reasoner.entails(ax)
    except ResourceLimit as e:
        raise _budget_failure(e)
    return EntailsResponse(entailed=entailed, axiom=render_axiom(ax, unicode=True), kb_fingerprint=s.kb.fingerprint()).model_dump()
