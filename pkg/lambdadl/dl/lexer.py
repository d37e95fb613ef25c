from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional

from lambdadl.errors import ParseError, Span

# Glyph aliases so that unicode-printed output re-parses.
GLYPHS = {
    "⊑": ("ident", "sub"),
    "≡": ("ident", "equiv"),
    "⊓": ("sym", "&"),
    "⊔": ("sym", "|"),
    "¬": ("sym", "!"),
    "∃": ("ident", "exists"),
    "∀": ("ident", "forall"),
    "⊤": ("ident", "Top"),
    "⊥": ("ident", "Bot"),
    "⁻": ("sym", "^-"),
    "→": ("sym", "->"),
    "λ": ("ident", "fun"),
}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>//[^\n]*)
  | (?P<xsd>xsd:[A-Za-z]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<sym>\^-|->|==|[(){}\[\].,:;&|!=])
    """,
    re.VERBOSE,
)

_ESCAPES = {"n": "\n", "t": "\t", '"': '"', "\\": "\\"}


@dataclass(frozen=True)
class Token:
    kind: str  # ident | string | xsd | sym | eof
    value: str
    line: int
    column: int

    @property
    def span(self) -> Span:
        return Span(self.line, self.column)


def unescape(body: str, line: int, column: int) -> str:
    out: List[str] = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch == "\\":
            nxt = body[i + 1] if i + 1 < len(body) else ""
            if nxt not in _ESCAPES:
                raise ParseError(f"unknown escape \\{nxt}", line, column + i + 1)
            out.append(_ESCAPES[nxt])
            i += 2
            continue
        out.append(ch)
        i += 1
    return "".join(out)


def escape(value: str) -> str:
    body = value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t")
    return f'"{body}"'


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    n = len(text)
    while pos < n:
        column = pos - line_start + 1
        ch = text[pos]
        if ch in GLYPHS:
            kind, value = GLYPHS[ch]
            tokens.append(Token(kind, value, line, column))
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            if ch == '"':
                raise ParseError("unterminated string literal", line, column)
            raise ParseError(f"unexpected character {ch!r}", line, column)
        kind = m.lastgroup or ""
        lexeme = m.group()
        if kind == "string":
            tokens.append(Token("string", unescape(lexeme[1:-1], line, column), line, column))
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, lexeme, line, column))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            line_start = pos + lexeme.rindex("\n") + 1
        pos = m.end()
    column = pos - line_start + 1
    tokens.append(Token("eof", "", line, column))
    return tokens


class TokenStream:
    """
    Cursor over a token list with the usual recursive-descent helpers.
    """

    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, kind: str, value: Optional[str] = None, tok: Optional[Token] = None) -> bool:
        tok = tok or self.current
        return tok.kind == kind and (value is None or tok.value == value)

    def at_sym(self, *values: str) -> bool:
        return self.current.kind == "sym" and self.current.value in values

    def at_keyword(self, *values: str) -> bool:
        return self.current.kind == "ident" and self.current.value in values

    def accept(self, kind: str, value: Optional[str] = None) -> Optional[Token]:
        if self.at(kind, value):
            return self.advance()
        return None

    def expect(self, kind: str, value: Optional[str] = None, what: Optional[str] = None) -> Token:
        if self.at(kind, value):
            return self.advance()
        self.fail(f"expected {what or value or kind}")
        raise AssertionError("unreachable")

    def fail(self, message: str, tok: Optional[Token] = None) -> None:
        tok = tok or self.current
        found = "end of input" if tok.kind == "eof" else repr(tok.value)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)

    def expect_end(self) -> None:
        if not self.at("eof"):
            self.fail("unexpected trailing input")
