from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from lambdadl.checker.context import EMPTY_CONTEXT, TypingContext
from lambdadl.checker.typecheck import typecheck
from lambdadl.config import BudgetConfig, EvalConfig
from lambdadl.dl.kb import EMPTY_KB, KnowledgeBase
from lambdadl.dl.parser import parse_kb
from lambdadl.errors import ParseError, SemanticError
from lambdadl.evaluator.outcomes import StuckReport
from lambdadl.evaluator.run import evaluate
from lambdadl.evaluator.trace import EvalTrace
from lambdadl.events import emit
from lambdadl.reasoner.service import Reasoner, reasoner_for
from lambdadl.syntax.parser import parse_repl_line, parse_term
from lambdadl.syntax.subst import substitute_all
from lambdadl.syntax.terms import Term, Value
from lambdadl.syntax.types import Type


def load_kb_text(text: str, source: str = "<text>") -> KnowledgeBase:
    try:
        kb = parse_kb(text)
    except (ParseError, SemanticError) as e:
        emit("kb.rejected", source=source, error=str(e))
        raise
    emit("kb.loaded", source=source, **kb.summary())
    return kb


def load_kb(path: Union[str, Path]) -> KnowledgeBase:
    return load_kb_text(Path(path).read_text(encoding="utf-8"), source=str(path))


def read_program(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


@dataclass
class Session:
    """
    One KB plus the names bound so far. `ctx` and `values` always have the
    same keys; every stored value was produced by a term of the ctx type.
    """
    kb: KnowledgeBase = EMPTY_KB
    cfg: EvalConfig = field(default_factory=EvalConfig.from_env)
    budget: BudgetConfig = field(default_factory=BudgetConfig.from_env)
    ctx: TypingContext = EMPTY_CONTEXT
    values: Dict[str, Value] = field(default_factory=dict)
    trace: Optional[EvalTrace] = None

    @property
    def reasoner(self) -> Reasoner:
        return reasoner_for(self.kb, self.budget)

    def load(self, path: Union[str, Path]) -> KnowledgeBase:
        """Switch KB; bindings made against the old one are dropped."""
        self.kb = load_kb(path)
        self.ctx = EMPTY_CONTEXT
        self.values = {}
        return self.kb

    def parse(self, text: str) -> Term:
        return parse_term(text, self.kb.objects, self.ctx.names())

    def parse_line(self, text: str) -> Tuple[Optional[str], Term]:
        return parse_repl_line(text, self.kb.objects, self.ctx.names())

    def check(self, t: Term) -> Type:
        return typecheck(self.kb, self.ctx, t, reasoner=self.reasoner)

    def run(self, t: Term) -> Tuple[Type, Union[Value, StuckReport]]:
        """Typecheck, then evaluate with the session's names substituted."""
        ty = self.check(t)
        closed = substitute_all(t, self.values)
        return ty, evaluate(self.kb, closed, self.cfg, self.reasoner, self.trace)

    def bind(self, name: str, t: Term) -> Tuple[Type, Union[Value, StuckReport]]:
        ty, out = self.run(t)
        if not isinstance(out, StuckReport):
            self.ctx = self.ctx.extend(name, ty)
            self.values[name] = out
        return ty, out
