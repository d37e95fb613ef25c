from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from enum import IntEnum
from typing import Callable, List, Optional

from dotenv import load_dotenv

from lambdadl.cli.repl import Repl, interactive_lines
from lambdadl.cli.session import Session, load_kb, read_program
from lambdadl.checker.typecheck import TypeChecker
from lambdadl.config import BudgetConfig, EvalConfig
from lambdadl.dl.kb import EMPTY_KB
from lambdadl.dl.parser import parse_concept
from lambdadl.errors import (
    EvaluationError,
    ParseError,
    ResourceLimit,
    SemanticError,
    StepLimitExceeded,
    TypingError,
)
from lambdadl.evaluator.outcomes import StuckReport
from lambdadl.evaluator.trace import EvalTrace
from lambdadl.syntax.printer import show_type, show_value


class ExitCode(IntEnum):
    OK = 0
    TYPE_ERROR = 1
    PARSE_OR_IO = 2
    STUCK = 3
    STEP_LIMIT = 4
    BUDGET = 5


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, ensure_ascii=False))


# -------------------------
# Configuration from flags
# -------------------------


def _budget(args: argparse.Namespace) -> BudgetConfig:
    cfg = BudgetConfig.from_env()
    if getattr(args, "node_budget", None) is not None:
        cfg = dataclasses.replace(cfg, node_budget=args.node_budget)
    if getattr(args, "time_budget_ms", None) is not None:
        cfg = dataclasses.replace(cfg, time_budget_ms=args.time_budget_ms)
    return cfg


def _eval_cfg(args: argparse.Namespace) -> EvalConfig:
    cfg = EvalConfig.from_env()
    if getattr(args, "step_limit", None) is not None:
        cfg = dataclasses.replace(cfg, step_limit=args.step_limit)
    if getattr(args, "trace", False):
        cfg = dataclasses.replace(cfg, trace=True)
    return cfg


def _session(args: argparse.Namespace) -> Session:
    kb = load_kb(args.kb) if args.kb else EMPTY_KB
    cfg = _eval_cfg(args)
    return Session(kb=kb, cfg=cfg, budget=_budget(args), trace=EvalTrace() if cfg.trace else None)


def _program_text(args: argparse.Namespace) -> str:
    if args.expr is not None:
        return args.expr
    if args.program is None:
        raise ParseError("no program given (pass a file or -e TEXT)", 0, 0)
    return read_program(args.program)


# -------------------------
# Subcommands
# -------------------------


def cmd_check(args: argparse.Namespace) -> int:
    s = _session(args)
    ty = s.check(s.parse(_program_text(args)))
    if args.json:
        _emit_json({"ok": True, "type": show_type(ty, unicode=True)})
    else:
        print(show_type(ty, unicode=True))
    return ExitCode.OK


def cmd_run(args: argparse.Namespace) -> int:
    s = _session(args)
    ty, out = s.run(s.parse(_program_text(args)))
    if isinstance(out, StuckReport):
        if args.json:
            _emit_json({"ok": False, "stuck": out.kind.value, "steps": out.steps})
        _err(f"runtime: {out.message()}")
        return ExitCode.STUCK
    if args.json:
        _emit_json({"ok": True, "type": show_type(ty, unicode=True), "value": show_value(out, unicode=True)})
    else:
        print(show_value(out, unicode=True))
    return ExitCode.OK


def cmd_query(args: argparse.Namespace) -> int:
    s = _session(args)
    c = parse_concept(args.concept)
    TypeChecker(s.kb, reasoner=s.reasoner).check_concept(c)
    satisfiable = s.reasoner.is_satisfiable(c)
    objects = s.reasoner.query_instances(c) if satisfiable else []
    if not satisfiable:
        _err(f"warning: {args.concept} is unsatisfiable; it has no instances")
    if args.json:
        _emit_json({"ok": True, "satisfiable": satisfiable, "objects": objects})
    else:
        for a in objects:
            print(a)
    return ExitCode.OK


def cmd_repl(args: argparse.Namespace) -> int:
    s = _session(args)
    Repl(s).run(interactive_lines())
    return ExitCode.OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("lambdadl.api.app:app", host=args.host, port=args.port)
    return ExitCode.OK


# -------------------------
# Parser
# -------------------------


def _common(p: argparse.ArgumentParser, kb_required: bool = True) -> None:
    p.add_argument("--kb", required=kb_required, help="knowledge base file (.kb)")
    p.add_argument("--node-budget", type=int, help="tableau nodes per reasoning question")
    p.add_argument("--time-budget-ms", type=int, help="wall-clock budget per reasoning question")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _program(p: argparse.ArgumentParser) -> None:
    p.add_argument("program", nargs="?", help="program file (.ldl)")
    p.add_argument("-e", dest="expr", help="program text instead of a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lambdadl", description="Typed λ-calculus over description-logic knowledge bases")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="type check a program")
    _common(s)
    _program(s)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("run", help="type check and evaluate a program")
    _common(s)
    _program(s)
    s.add_argument("--trace", action="store_true", help="print each reduction step to stderr")
    s.add_argument("--step-limit", type=int, help="maximum number of reduction steps")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("query", help="list the named instances of a concept")
    _common(s)
    s.add_argument("concept")
    s.set_defaults(func=cmd_query)

    s = sub.add_parser("repl", help="interactive session")
    _common(s, kb_required=False)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--step-limit", type=int)
    s.set_defaults(func=cmd_repl)

    s = sub.add_parser("serve", help="HTTP API")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8000)
    s.set_defaults(func=cmd_serve)
    return parser


def _guarded(fn: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    where = getattr(args, "program", None) or getattr(args, "kb", None) or "<input>"
    try:
        return int(fn(args))
    except TypingError as e:
        _err(f"{where}: {e}")
        return ExitCode.TYPE_ERROR
    except (ParseError, SemanticError) as e:
        _err(f"{where}: {e}")
        return ExitCode.PARSE_OR_IO
    except OSError as e:
        _err(f"error: {e}")
        return ExitCode.PARSE_OR_IO
    except ValueError as e:
        # bad numeric environment settings
        _err(f"error: {e}")
        return ExitCode.PARSE_OR_IO
    except StepLimitExceeded as e:
        _err(f"runtime: {e}")
        return ExitCode.STEP_LIMIT
    except ResourceLimit as e:
        _err(f"reasoner: {e.message} {e.budget}")
        return ExitCode.BUDGET
    except EvaluationError as e:
        _err(f"runtime: {e.message}")
        return ExitCode.STUCK


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    return _guarded(args.func, args)


if __name__ == "__main__":
    sys.exit(main())
