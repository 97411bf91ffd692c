"""IG Script statement parser, expander and exporters."""

from .model import (
    Annotation,
    AtomicStatement,
    CellValue,
    Combination,
    CombinationKind,
    Component,
    ComponentSymbol,
    Family,
    FreeText,
    Level,
    LogicalOperator,
    NEST,
    SYMBOLS,
    Span,
    StatementTree,
    SubStatementId,
    UnknownSymbolError,
    render_id,
    symbol_from_code,
)
from .lexer import Token, TokenKind, UnterminatedBracket, tokenize
from .parser import (
    Issue,
    IssueKind,
    ParseError,
    Severity,
    ValidationReport,
    parse,
    parse_content,
    parse_with_report,
    serialize,
    validate,
)
from .transform import (
    ExpansionResult,
    degree_of_variability,
    expand,
    filter_level,
    reorder_conditions,
)

__version__ = "0.1.0"

__all__ = [
    "Annotation",
    "AtomicStatement",
    "CellValue",
    "Combination",
    "CombinationKind",
    "Component",
    "ComponentSymbol",
    "ExpansionResult",
    "Family",
    "FreeText",
    "Issue",
    "IssueKind",
    "Level",
    "LogicalOperator",
    "NEST",
    "ParseError",
    "SYMBOLS",
    "Severity",
    "Span",
    "StatementTree",
    "SubStatementId",
    "Token",
    "TokenKind",
    "UnknownSymbolError",
    "UnterminatedBracket",
    "ValidationReport",
    "degree_of_variability",
    "expand",
    "filter_level",
    "parse",
    "parse_content",
    "parse_with_report",
    "render_id",
    "reorder_conditions",
    "serialize",
    "symbol_from_code",
    "tokenize",
    "validate",
    "__version__",
]
