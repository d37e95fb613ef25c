from __future__ import annotations

import sys
from typing import Callable, Iterable, Optional, TextIO

from lambdadl.cli.session import Session
from lambdadl.errors import LambdaDLError
from lambdadl.events import emit
from lambdadl.evaluator.outcomes import StuckReport
from lambdadl.syntax.printer import show_type, show_value

PROMPT = "λ> "

HELP = """\
  let x = t      evaluate t and bind it to x
  t              evaluate t
  :type t        show the type of t
  :kb            describe the loaded KB
  :cache         show entailment cache counters
  :load PATH     load another KB (drops all bindings)
  :quit          leave"""


class Repl:
    def __init__(self, session: Session, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> None:
        self.session = session
        self.out = out if out is not None else sys.stdout
        self.err = err if err is not None else sys.stderr

    def _say(self, text: str) -> None:
        print(text, file=self.out)

    def _diag(self, text: str) -> None:
        print(text, file=self.err)

    def meta(self, line: str) -> bool:
        """Handle a `:command`. False means quit."""
        cmd, _, arg = line[1:].partition(" ")
        arg = arg.strip()
        s = self.session
        if cmd in ("quit", "q"):
            return False
        if cmd == "help":
            self._say(HELP)
        elif cmd == "type":
            self._say(show_type(s.check(s.parse(arg)), unicode=True))
        elif cmd == "kb":
            info = s.kb.summary()
            self._say(" ".join(f"{k}={v}" for k, v in info.items()))
        elif cmd == "cache":
            snap = s.reasoner.snapshot()
            emit("reasoner.cache", kb=snap["kb"], **snap["cache"])
            self._say(" ".join(f"{k}={v}" for k, v in snap["cache"].items()))
        elif cmd == "load":
            kb = s.load(arg)
            self._say(f"loaded {arg} ({kb.fingerprint()})")
        else:
            self._diag(f"unknown command :{cmd} (try :help)")
        return True

    def eval_line(self, line: str) -> None:
        s = self.session
        name, t = s.parse_line(line)
        ty, out = s.bind(name, t) if name else s.run(t)
        if isinstance(out, StuckReport):
            self._diag(f"runtime: {out.message()}")
            return
        self._say(f"{name or '-'} : {show_type(ty, unicode=True)} = {show_value(out, unicode=True)}")

    def handle(self, line: str) -> bool:
        line = line.strip()
        if not line or line.startswith("//"):
            return True
        try:
            if line.startswith(":"):
                return self.meta(line)
            self.eval_line(line)
        except (LambdaDLError, OSError) as e:
            self._diag(str(e))
        return True

    def run(self, lines: Iterable[str]) -> None:
        for line in lines:
            if not self.handle(line):
                break


def interactive_lines(prompt: str = PROMPT, read: Callable[[str], str] = input) -> Iterable[str]:
    while True:
        try:
            yield read(prompt)
        except (EOFError, KeyboardInterrupt):
            print()
            return
