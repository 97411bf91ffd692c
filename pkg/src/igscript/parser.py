"""Validation, parsing and canonical serialization of IG Script.

:func:`validate` collects positioned issues without raising.
:func:`parse` returns a :class:`~igscript.model.StatementTree` and
raises :class:`ParseError` when any error-severity issue is present.
:func:`serialize` renders a tree back to canonical text; parsing that
text yields an equal tree.

Brace bodies are classified by splitting on top-level operators: if
every branch is a single component of one symbol the braces hold a
nested component combination, if branches hold several components they
form a component pair combination, and an operator-free body under a
symbol is a nested statement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .lexer import Token, TokenKind, scan
from .model import (
    Annotation,
    AnnotationScope,
    Combination,
    CombinationKind,
    Component,
    ComponentSymbol,
    ContentFragment,
    Element,
    FreeText,
    LogicalOperator,
    Span,
    StatementTree,
    symbol_from_code,
)


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


class IssueKind(Enum):
    UNBALANCED_BRACKET = "UnbalancedBracket"
    UNKNOWN_SYMBOL = "UnknownSymbol"
    EMPTY_COMPONENT = "EmptyComponent"
    EMPTY_BRANCH = "EmptyBranch"
    AMBIGUOUS_PRECEDENCE = "AmbiguousPrecedence"
    UNEXPECTED_OPERATOR = "UnexpectedOperator"
    UNEXPECTED_ANNOTATION = "UnexpectedAnnotation"
    MISSING_OPERATOR = "MissingOperator"
    SYMBOL_MISMATCH = "SymbolMismatch"
    NO_COMPONENTS_FOUND = "NoComponentsFound"
    EMPTY_INPUT = "EmptyInput"
    PROPERTY_NESTING = "PropertyNesting"


@dataclass(frozen=True)
class Issue:
    kind: IssueKind
    message: str
    position: int
    length: int
    severity: Severity = Severity.ERROR

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message} (offset {self.position})"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...]

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def errors(self) -> tuple[Issue, ...]:
        return tuple(i for i in self.issues if i.severity is Severity.ERROR)

    @property
    def warnings(self) -> tuple[Issue, ...]:
        return tuple(i for i in self.issues if i.severity is Severity.WARNING)


class ParseError(ValueError):
    """Input is not well-formed IG Script."""

    def __init__(self, report: ValidationReport) -> None:
        first = report.errors[0]
        super().__init__(str(first))
        self.report = report

    @property
    def issue(self) -> Issue:
        return self.report.errors[0]


_WORD_BEFORE_BRACKET = re.compile(r"([A-Za-z]+(?:,[A-Za-z]+)?)\Z")

_OPENERS = (TokenKind.LPAREN, TokenKind.LBRACE)
_CLOSERS = (TokenKind.RPAREN, TokenKind.RBRACE)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.issues: list[Issue] = []
        self.tokens: list[Token] = []
        self.match: dict[int, int] = {}
        self.tree: StatementTree | None = None

    # -- issue helpers -------------------------------------------------

    def _issue(self, kind: IssueKind, message: str, position: int,
               length: int, severity: Severity = Severity.ERROR) -> None:
        self.issues.append(Issue(kind, message, position, length, severity))

    def report(self) -> ValidationReport:
        ordered = sorted(self.issues, key=lambda i: i.position)
        return ValidationReport(tuple(ordered))

    # -- setup ---------------------------------------------------------

    def _scan(self) -> None:
        self.tokens, unterminated = scan(self.text)
        for pos in unterminated:
            self._issue(IssueKind.UNBALANCED_BRACKET,
                        "unterminated '['", pos, 1)

    def _balance(self) -> None:
        stack: list[int] = []
        for idx, tok in enumerate(self.tokens):
            if tok.kind in _OPENERS:
                stack.append(idx)
            elif tok.kind in _CLOSERS:
                if not stack:
                    self._issue(IssueKind.UNBALANCED_BRACKET,
                                f"unmatched '{tok.value}'", tok.start, 1)
                    continue
                open_idx = stack.pop()
                open_tok = self.tokens[open_idx]
                want = (TokenKind.RPAREN if open_tok.kind is TokenKind.LPAREN
                        else TokenKind.RBRACE)
                if tok.kind is not want:
                    self._issue(IssueKind.UNBALANCED_BRACKET,
                                f"'{tok.value}' closes '{open_tok.value}'",
                                tok.start, 1)
                # pair them up anyway so parsing can continue
                self.match[open_idx] = idx
                self.match[idx] = open_idx
        for open_idx in stack:
            tok = self.tokens[open_idx]
            self._issue(IssueKind.UNBALANCED_BRACKET,
                        f"unclosed '{tok.value}'", tok.start, 1)

    # -- main entry points ----------------------------------------------

    def run(self) -> None:
        self._scan()
        self._balance()
        if not self.text.strip():
            self._issue(IssueKind.EMPTY_INPUT, "input is empty",
                        0, len(self.text))
            self.tree = StatementTree((), Span(0, len(self.text)))
            return
        self.tree = self._statement(0, len(self.tokens))
        if not _has_components(self.tree):
            self._issue(IssueKind.NO_COMPONENTS_FOUND,
                        "no coded components in input", 0, len(self.text))

    def run_content(self) -> tuple[ContentFragment, ...]:
        """Parse the whole input as the interior of a parenthesized body."""
        self._scan()
        self._balance()
        return self._content(0, len(self.tokens))

    # -- statement level -------------------------------------------------

    def _statement(self, lo: int, hi: int) -> StatementTree:
        elements: list[Element] = []
        pend: list[int] | None = None  # [char_start, char_end]

        def extend(a: int, b: int) -> None:
            nonlocal pend
            if pend is None:
                pend = [a, b]
            else:
                pend[1] = b

        def flush() -> None:
            nonlocal pend
            if pend is None:
                return
            raw = self.text[pend[0]:pend[1]]
            stripped = raw.strip()
            if stripped:
                lead = len(raw) - len(raw.lstrip())
                start = pend[0] + lead
                elements.append(FreeText(stripped,
                                         Span(start, start + len(stripped))))
            pend = None

        def check_unknown_symbol() -> None:
            # a bare word glued to '(' or '{' is probably a typoed code
            if pend is None:
                return
            m = _WORD_BEFORE_BRACKET.search(self.text[pend[0]:pend[1]])
            if m:
                self._issue(IssueKind.UNKNOWN_SYMBOL,
                            f"unknown component symbol {m.group(1)!r}",
                            pend[0] + m.start(1), len(m.group(1)))

        i = lo
        while i < hi:
            tok = self.tokens[i]
            if tok.kind is TokenKind.SYMBOL:
                i = self._component(tok, i, hi, elements, flush)
                continue
            if tok.kind is TokenKind.ANNOTATION:
                flush()
                elements.append(Annotation(tok.value.strip(),
                                           AnnotationScope.STATEMENT,
                                           Span(tok.start, tok.end)))
                i += 1
                continue
            if tok.kind is TokenKind.OPERATOR:
                self._issue(IssueKind.UNEXPECTED_OPERATOR,
                            f"operator {tok.operator.token} outside any "
                            "combination", tok.start, tok.end - tok.start)
                extend(tok.start, tok.end)
                i += 1
                continue
            if tok.kind is TokenKind.LBRACE:
                check_unknown_symbol()
                flush()
                close = self.match.get(i)
                body_hi = close if close is not None else hi
                end_char = (self.tokens[close].end if close is not None
                            else self._range_end(hi))
                elements.append(self._brace_body(None, i + 1, body_hi, tok,
                                                 end_char))
                i = (close + 1) if close is not None else hi
                continue
            if tok.kind is TokenKind.LPAREN:
                check_unknown_symbol()
                close = self.match.get(i)
                if close is None:
                    extend(tok.start, tok.end)
                    i += 1
                    continue
                # a bare parenthesized run is plain prose
                extend(tok.start, self.tokens[close].end)
                i = close + 1
                continue
            # TEXT, or a stray closer already reported by the balance pass
            extend(tok.start, tok.end)
            i += 1
        flush()
        start = self.tokens[lo].start if lo < hi else 0
        return StatementTree(tuple(elements), Span(start, self._range_end(hi)))

    def _range_end(self, hi: int) -> int:
        return self.tokens[hi - 1].end if 0 < hi <= len(self.tokens) \
            else len(self.text)

    def _component(self, tok: Token, i: int, hi: int,
                   elements: list[Element], flush) -> int:
        symbol = symbol_from_code(tok.value)
        j = i + 1
        ann_tok: Token | None = None
        if j < hi and self.tokens[j].kind is TokenKind.ANNOTATION:
            ann_tok = self.tokens[j]
            j += 1
        if j >= hi or self.tokens[j].kind not in _OPENERS:
            # the tokenizer promises a bracket; fall back to text if not
            flush()
            elements.append(FreeText(tok.value, Span(tok.start, tok.end)))
            return i + 1
        flush()
        open_idx = j
        open_tok = self.tokens[open_idx]
        close = self.match.get(open_idx)
        body_lo = open_idx + 1
        body_hi = close if close is not None else hi
        end_char = (self.tokens[close].end if close is not None
                    else self._range_end(hi))
        span = Span(tok.start, end_char)
        if open_tok.kind is TokenKind.LPAREN:
            frags = self._content(body_lo, body_hi)
            if not frags:
                self._issue(IssueKind.EMPTY_COMPONENT,
                            f"component {symbol.code} has no content",
                            tok.start, end_char - tok.start)
            ann = self._annotation(ann_tok, AnnotationScope.COMPONENT)
            elements.append(Component(symbol, ann, content=frags, span=span))
        else:
            if symbol.is_property:
                self._issue(IssueKind.PROPERTY_NESTING,
                            f"property component {symbol.code} holds a "
                            "nested statement", tok.start,
                            end_char - tok.start, Severity.WARNING)
            nested = self._brace_body(symbol, body_lo, body_hi, open_tok,
                                      end_char)
            ann = self._annotation(ann_tok, AnnotationScope.NESTED)
            elements.append(Component(symbol, ann, nested=nested, span=span))
        return (close + 1) if close is not None else hi

    def _annotation(self, tok: Token | None,
                    scope: AnnotationScope) -> Annotation | None:
        if tok is None:
            return None
        return Annotation(tok.value.strip(), scope, Span(tok.start, tok.end))

    # -- brace bodies -----------------------------------------------------

    def _brace_body(self, outer: ComponentSymbol | None, lo: int, hi: int,
                    open_tok: Token, end_char: int):
        span = Span(open_tok.start, end_char)
        ops = self._top_operators(lo, hi)
        if not ops:
            if self._blank(lo, hi):
                self._issue(IssueKind.EMPTY_COMPONENT,
                            "braces hold no statement",
                            open_tok.start, end_char - open_tok.start)
            stmt = self._statement(lo, hi)
            if outer is None:
                self._issue(IssueKind.MISSING_OPERATOR,
                            "braced group without a logical operator",
                            open_tok.start, end_char - open_tok.start)
                return Combination(LogicalOperator.AND, (stmt,),
                                   CombinationKind.COMPONENT_PAIR, span)
            return stmt
        op = self._uniform_operator(ops)
        branches: list[StatementTree] = []
        for blo, bhi, op_idx in self._split(lo, hi, ops):
            if self._blank(blo, bhi):
                op_tok = self.tokens[op_idx]
                self._issue(IssueKind.EMPTY_BRANCH,
                            f"empty branch next to {op_tok.operator.token}",
                            op_tok.start, op_tok.end - op_tok.start)
                continue
            branches.append(self._statement(blo, bhi))
        singles = [b.elements[0] for b in branches
                   if len(b.elements) == 1
                   and isinstance(b.elements[0], Component)]
        if len(singles) == len(branches) and branches:
            if outer is not None:
                for comp in singles:
                    if comp.symbol is not outer:
                        self._issue(
                            IssueKind.SYMBOL_MISMATCH,
                            f"nested combination under {outer.code} contains "
                            f"{comp.symbol.code}",
                            comp.span.start, len(comp.span))
                return Combination(op, tuple(singles),
                                   CombinationKind.NESTED_COMPONENTS, span)
        return Combination(op, tuple(branches),
                           CombinationKind.COMPONENT_PAIR, span)

    def _top_operators(self, lo: int, hi: int) -> list[int]:
        depth = 0
        found: list[int] = []
        for idx in range(lo, hi):
            kind = self.tokens[idx].kind
            if kind in _OPENERS:
                depth += 1
            elif kind in _CLOSERS:
                depth = max(0, depth - 1)
            elif kind is TokenKind.OPERATOR and depth == 0:
                found.append(idx)
        return found

    def _uniform_operator(self, ops: list[int]) -> LogicalOperator:
        first = self.tokens[ops[0]]
        for idx in ops[1:]:
            tok = self.tokens[idx]
            if tok.value != first.value:
                self._issue(IssueKind.AMBIGUOUS_PRECEDENCE,
                            f"{tok.operator.token} mixed with "
                            f"{first.operator.token} at one level; "
                            "group with parentheses or braces",
                            tok.start, tok.end - tok.start)
                break
        return first.operator

    def _split(self, lo: int, hi: int,
               ops: list[int]) -> list[tuple[int, int, int]]:
        """Branch token ranges, each with the operator index beside it."""
        out: list[tuple[int, int, int]] = []
        start = lo
        for op_idx in ops:
            out.append((start, op_idx, op_idx))
            start = op_idx + 1
        out.append((start, hi, ops[-1]))
        return out

    def _blank(self, lo: int, hi: int) -> bool:
        return all(t.kind is TokenKind.TEXT and not t.value.strip()
                   for t in self.tokens[lo:hi])

    # -- component content -------------------------------------------------

    def _content(self, lo: int, hi: int) -> tuple[ContentFragment, ...]:
        ops = self._top_operators(lo, hi)
        if ops:
            op = self._uniform_operator(ops)
            children: list = []
            for blo, bhi, op_idx in self._split(lo, hi, ops):
                frags = self._content(blo, bhi)
                if not frags:
                    op_tok = self.tokens[op_idx]
                    self._issue(IssueKind.EMPTY_BRANCH,
                                "empty branch next to "
                                f"{op_tok.operator.token}",
                                op_tok.start, op_tok.end - op_tok.start)
                    continue
                if len(frags) == 1 and isinstance(frags[0], Combination):
                    children.append(frags[0])
                else:
                    children.append(frags)
            start = self.tokens[lo].start if lo < hi else 0
            span = Span(start, self._range_end(hi))
            return (Combination(op, tuple(children),
                                CombinationKind.WITHIN_COMPONENT, span),)

        frags: list[ContentFragment] = []
        buf: list[str] = []

        def lit(s: str) -> None:
            buf.append(s)

        def flush_lit() -> None:
            if buf:
                s = "".join(buf)
                buf.clear()
                if frags and isinstance(frags[-1], str):
                    frags[-1] += s
                elif s:
                    frags.append(s)

        i = lo
        while i < hi:
            tok = self.tokens[i]
            if tok.kind is TokenKind.LPAREN:
                close = self.match.get(i)
                if close is None or close >= hi:
                    lit(tok.value)
                    i += 1
                    continue
                inner = self._content(i + 1, close)
                if any(isinstance(f, Combination) for f in inner):
                    if len(inner) == 1:
                        flush_lit()
                        frags.append(inner[0])
                    else:
                        # keep the prose parens, splice the inner groups
                        lit("(")
                        flush_lit()
                        for f in inner:
                            if isinstance(f, str):
                                lit(f)
                                flush_lit()
                            else:
                                frags.append(f)
                        lit(")")
                else:
                    # operator-free group stays verbatim
                    lit(self.text[tok.start:self.tokens[close].end])
                i = close + 1
                continue
            if tok.kind is TokenKind.LBRACE:
                close = self.match.get(i)
                if close is None or close >= hi:
                    lit(tok.value)
                    i += 1
                    continue
                lit(self.text[tok.start:self.tokens[close].end])
                i = close + 1
                continue
            if tok.kind is TokenKind.ANNOTATION:
                nxt = self.tokens[i + 1] if i + 1 < hi else None
                if nxt is not None and nxt.kind is TokenKind.LPAREN \
                        and nxt.start == tok.end:
                    self._issue(IssueKind.UNEXPECTED_ANNOTATION,
                                "annotation on a group inside content",
                                tok.start, tok.end - tok.start)
                lit(self.text[tok.start:tok.end])
                i += 1
                continue
            # TEXT, SYMBOL and stray closers stay literal
            lit(self.text[tok.start:tok.end])
            i += 1
        flush_lit()
        return _trim_fragments(frags)


def _trim_fragments(frags: list[ContentFragment]) -> tuple[ContentFragment, ...]:
    if frags and isinstance(frags[0], str):
        frags[0] = frags[0].lstrip()
        if not frags[0]:
            frags.pop(0)
    if frags and isinstance(frags[-1], str):
        frags[-1] = frags[-1].rstrip()
        if not frags[-1]:
            frags.pop()
    return tuple(frags)


def _has_components(tree: StatementTree) -> bool:
    for el in tree.elements:
        if isinstance(el, Component):
            return True
        if isinstance(el, Combination):
            for child in el.children:
                if isinstance(child, Component):
                    return True
                if isinstance(child, StatementTree) and _has_components(child):
                    return True
    return False


# -- public api -------------------------------------------------------------


def validate(text: str) -> ValidationReport:
    """Check IG Script text and report every issue with its position."""
    p = _Parser(text)
    p.run()
    return p.report()


def parse(text: str) -> StatementTree:
    """Parse IG Script text; raises :class:`ParseError` on any error."""
    p = _Parser(text)
    p.run()
    report = p.report()
    if not report.ok:
        raise ParseError(report)
    assert p.tree is not None
    return p.tree


def parse_with_report(text: str) -> tuple[StatementTree, ValidationReport]:
    """Parse leniently; the tree is best-effort when errors are present."""
    p = _Parser(text)
    p.run()
    assert p.tree is not None
    return p.tree, p.report()


def parse_content(body: str) -> tuple[ContentFragment, ...]:
    """Parse the interior of a parenthesized component body."""
    p = _Parser(body)
    frags = p.run_content()
    report = p.report()
    if not report.ok:
        raise ParseError(report)
    return frags


# -- serialization -----------------------------------------------------------


def serialize(tree: StatementTree) -> str:
    """Render a tree to canonical text (single spaces between elements)."""
    parts = [_render_element(e) for e in tree.elements]
    return " ".join(p for p in parts if p)


def _render_element(el: Element) -> str:
    if isinstance(el, FreeText):
        return el.text
    if isinstance(el, Annotation):
        return el.render()
    if isinstance(el, Combination):
        # a bare top-level combination is a component pair
        return "{" + _render_branches(el) + "}"
    assert isinstance(el, Component)
    head = el.symbol.code
    if el.annotation is not None:
        head += el.annotation.render()
    if el.content is not None:
        return f"{head}({render_content(el.content)})"
    return f"{head}{{{_render_nested(el.nested)}}}"


def _render_nested(nested) -> str:
    if isinstance(nested, StatementTree):
        return serialize(nested)
    assert isinstance(nested, Combination)
    return _render_branches(nested)


def _render_branches(comb: Combination) -> str:
    sep = f" {comb.operator.token} "
    parts = []
    for child in comb.children:
        if isinstance(child, StatementTree):
            parts.append(serialize(child))
        elif isinstance(child, Component):
            parts.append(_render_element(child))
        elif isinstance(child, Combination):
            parts.append(f"({_render_group_body(child)})")
        else:
            parts.append(render_content(child))
    return sep.join(parts)


def render_content(frags: tuple[ContentFragment, ...]) -> str:
    if len(frags) == 1 and isinstance(frags[0], Combination):
        return _render_group_body(frags[0])
    out = []
    for f in frags:
        if isinstance(f, str):
            out.append(f)
        else:
            out.append(f"({_render_group_body(f)})")
    return "".join(out)


def _render_group_body(comb: Combination) -> str:
    sep = f" {comb.operator.token} "
    parts = []
    for child in comb.children:
        if isinstance(child, Combination):
            parts.append(f"({_render_group_body(child)})")
        else:
            parts.append(render_content(child))
    return sep.join(parts)
