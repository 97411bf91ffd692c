"""Lossless tokenizer for IG Script text.

Tokens carry codepoint spans into the source; concatenating the source
slices of all tokens reproduces the input exactly.  A symbol token is
only emitted when a known code sits at a word boundary and is directly
followed by an optional annotation bracket and an opening parenthesis
or brace; anywhere else the same letters are plain text.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import CODES_BY_LENGTH, OPERATOR_NAMES, LogicalOperator


class TokenKind(Enum):
    SYMBOL = "symbol"
    LPAREN = "lparen"
    RPAREN = "rparen"
    LBRACE = "lbrace"
    RBRACE = "rbrace"
    OPERATOR = "operator"
    ANNOTATION = "annotation"
    TEXT = "text"


@dataclass(frozen=True)
class Token:
    """One token; ``value`` holds the symbol code, the operator name,
    the annotation interior, or the raw text run."""

    kind: TokenKind
    start: int
    end: int
    value: str

    @property
    def operator(self) -> LogicalOperator:
        return LogicalOperator[self.value]


class UnterminatedBracket(ValueError):
    """The input ended inside a square bracket."""

    def __init__(self, position: int) -> None:
        super().__init__(f"unterminated '[' at offset {position}")
        self.position = position


_BRACKETS = {"(": TokenKind.LPAREN, ")": TokenKind.RPAREN,
             "{": TokenKind.LBRACE, "}": TokenKind.RBRACE}

_SYMBOL_STARTS = frozenset(code[0] for code in CODES_BY_LENGTH)


def _match_square(text: str, start: int) -> int | None:
    """Index just past the ']' matching the '[' at start, or None."""
    depth = 0
    for i in range(start, len(text)):
        c = text[i]
        if c == "[":
            depth += 1
        elif c == "]":
            depth -= 1
            if depth == 0:
                return i + 1
    return None


def _match_symbol(text: str, i: int) -> str | None:
    """Symbol code starting at i, if one is attached to a body here."""
    if i > 0 and (text[i - 1].isalnum() or text[i - 1] == "_"):
        return None
    for code in CODES_BY_LENGTH:
        if not text.startswith(code, i):
            continue
        j = i + len(code)
        if j < len(text) and text[j] == "[":
            end = _match_square(text, j)
            if end is None:
                return None
            inner = text[j + 1:end - 1].strip()
            if inner in OPERATOR_NAMES:
                return None
            j = end
        if j < len(text) and text[j] in "({":
            return code
    return None


def scan(text: str) -> tuple[list[Token], list[int]]:
    """Tokenize leniently.

    Returns the token list plus the offsets of any unterminated square
    brackets, which are kept in the stream as plain text.
    """
    tokens: list[Token] = []
    problems: list[int] = []
    n = len(text)
    i = 0
    text_start: int | None = None

    def flush(upto: int) -> None:
        nonlocal text_start
        if text_start is not None and upto > text_start:
            tokens.append(Token(TokenKind.TEXT, text_start, upto,
                                text[text_start:upto]))
        text_start = None

    while i < n:
        ch = text[i]
        if ch in _BRACKETS:
            flush(i)
            tokens.append(Token(_BRACKETS[ch], i, i + 1, ch))
            i += 1
            continue
        if ch == "[":
            end = _match_square(text, i)
            if end is None:
                problems.append(i)
                if text_start is None:
                    text_start = i
                i += 1
                continue
            flush(i)
            inner = text[i + 1:end - 1]
            if inner.strip() in OPERATOR_NAMES:
                tokens.append(Token(TokenKind.OPERATOR, i, end, inner.strip()))
            else:
                tokens.append(Token(TokenKind.ANNOTATION, i, end, inner))
            i = end
            continue
        if ch == "]":
            # stray close; stays text
            if text_start is None:
                text_start = i
            i += 1
            continue
        if ch in _SYMBOL_STARTS:
            code = _match_symbol(text, i)
            if code is not None:
                flush(i)
                tokens.append(Token(TokenKind.SYMBOL, i, i + len(code), code))
                i += len(code)
                continue
        if text_start is None:
            text_start = i
        i += 1
    flush(n)
    return tokens, problems


def tokenize(text: str) -> list[Token]:
    """Tokenize strictly; raises :class:`UnterminatedBracket`."""
    tokens, problems = scan(text)
    if problems:
        raise UnterminatedBracket(problems[0])
    return tokens
