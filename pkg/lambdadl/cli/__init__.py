from lambdadl.cli.main import ExitCode, build_parser, main
from lambdadl.cli.repl import Repl
from lambdadl.cli.session import Session, load_kb, load_kb_text

__all__ = ["ExitCode", "build_parser", "main", "Repl", "Session", "load_kb", "load_kb_text"]
