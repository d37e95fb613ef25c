from __future__ import annotations

from typing import Optional, Union

from lambdadl.config import EvalConfig
from lambdadl.dl.kb import KnowledgeBase
from lambdadl.errors import StepLimitExceeded
from lambdadl.evaluator.outcomes import Done, Stuck, StuckReport
from lambdadl.evaluator.step import Stepper
from lambdadl.evaluator.trace import EvalTrace
from lambdadl.events import emit
from lambdadl.reasoner.service import Reasoner
from lambdadl.syntax.terms import Term, Value


def evaluate(
    kb: KnowledgeBase,
    t: Term,
    cfg: Optional[EvalConfig] = None,
    reasoner: Optional[Reasoner] = None,
    trace: Optional[EvalTrace] = None,
) -> Union[Value, StuckReport]:
    """
    Reduce t to a value. `head nil` / `tail nil` give a StuckReport; more
    than cfg.step_limit reductions raise StepLimitExceeded.
    """
    cfg = cfg or EvalConfig.from_env()
    if trace is None and cfg.trace:
        trace = EvalTrace()
    stepper = Stepper(kb, reasoner)

    if trace is not None:
        trace.record(0, t)
    for steps in range(cfg.step_limit + 1):
        out = stepper.step(t)
        if isinstance(out, Done):
            return out.value
        if isinstance(out, Stuck):
            emit("eval.stuck", kind=out.kind.value, steps=steps, kb=kb.fingerprint())
            return StuckReport(kind=out.kind, term=t, redex=out.redex, steps=steps)
        if steps == cfg.step_limit:
            break
        t = out.next
        if trace is not None:
            trace.record(steps + 1, t, out.rule)

    emit("eval.step_limit", steps=cfg.step_limit, kb=kb.fingerprint())
    raise StepLimitExceeded(cfg.step_limit, t)
