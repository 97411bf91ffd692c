"""Core vocabulary and syntax tree for IG Script statements.

IG Script codes institutional statements by wrapping each clause in a
component symbol: ``A(farmer) D(must) I(submit) Bdir(report)``.  This
module defines the component symbol table, the logical operators and
levels of expressiveness, the tree produced by the parser, and the
hierarchical identifiers assigned to sub-statements during expansion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Union


class Family(Enum):
    """Which statement form a component belongs to."""

    REGULATIVE = "regulative"
    CONSTITUTIVE = "constitutive"
    SHARED = "shared"


@dataclass(frozen=True)
class ComponentSymbol:
    """One entry of the component symbol table."""

    code: str
    name: str
    family: Family
    is_property: bool = False
    required: bool = False
    # code of the component this property attaches to, e.g. "A" for "A,p"
    parent_code: str | None = None


SYMBOLS: tuple[ComponentSymbol, ...] = (
    ComponentSymbol("A", "Attributes", Family.REGULATIVE, required=True),
    ComponentSymbol("A,p", "Attributes Property", Family.REGULATIVE,
                    is_property=True, parent_code="A"),
    ComponentSymbol("D", "Deontic", Family.REGULATIVE),
    ComponentSymbol("I", "Aim", Family.REGULATIVE, required=True),
    ComponentSymbol("Bdir", "Direct Object", Family.REGULATIVE),
    ComponentSymbol("Bdir,p", "Direct Object Property", Family.REGULATIVE,
                    is_property=True, parent_code="Bdir"),
    ComponentSymbol("Bind", "Indirect Object", Family.REGULATIVE),
    ComponentSymbol("Bind,p", "Indirect Object Property", Family.REGULATIVE,
                    is_property=True, parent_code="Bind"),
    ComponentSymbol("E", "Constituted Entity", Family.CONSTITUTIVE, required=True),
    ComponentSymbol("E,p", "Constituted Entity Property", Family.CONSTITUTIVE,
                    is_property=True, parent_code="E"),
    ComponentSymbol("M", "Modal", Family.CONSTITUTIVE),
    ComponentSymbol("F", "Constitutive Function", Family.CONSTITUTIVE, required=True),
    ComponentSymbol("P", "Constituting Properties", Family.CONSTITUTIVE),
    ComponentSymbol("P,p", "Constituting Properties Property", Family.CONSTITUTIVE,
                    is_property=True, parent_code="P"),
    ComponentSymbol("Cac", "Activation Condition", Family.SHARED),
    ComponentSymbol("Cex", "Execution Constraint", Family.SHARED),
    ComponentSymbol("O", "Or Else", Family.SHARED),
)

_BY_CODE: dict[str, ComponentSymbol] = {s.code: s for s in SYMBOLS}

# longest first so that prefix scanning finds "Bdir,p" before "Bdir" before "B"
CODES_BY_LENGTH: tuple[str, ...] = tuple(
    sorted(_BY_CODE, key=len, reverse=True))


class UnknownSymbolError(KeyError):
    """Raised when a string is not a component symbol code."""


def symbol_from_code(code: str) -> ComponentSymbol:
    """Return the symbol table entry for an exact code.

    Matching is case sensitive: ``cac`` or ``bdir`` are not symbols.
    """
    try:
        return _BY_CODE[code]
    except KeyError:
        raise UnknownSymbolError(code) from None


class LogicalOperator(Enum):
    AND = "AND"
    OR = "OR"
    XOR = "XOR"

    @property
    def token(self) -> str:
        return f"[{self.value}]"


OPERATOR_NAMES = frozenset(op.value for op in LogicalOperator)


class Level(Enum):
    """Level of expressiveness, ordered: CORE < EXTENDED < LOGICO."""

    CORE = 0
    EXTENDED = 1
    LOGICO = 2

    @classmethod
    def from_name(cls, name: str) -> "Level":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown level {name!r}") from None

    def __ge__(self, other: "Level") -> bool:
        return self.value >= other.value

    def __gt__(self, other: "Level") -> bool:
        return self.value > other.value

    def __le__(self, other: "Level") -> bool:
        return self.value <= other.value

    def __lt__(self, other: "Level") -> bool:
        return self.value < other.value


class AnnotationScope(Enum):
    COMPONENT = "component"
    NESTED = "nested"
    STATEMENT = "statement"


@dataclass(frozen=True)
class Span:
    """Half-open codepoint range [start, end) into the source text."""

    start: int = 0
    end: int = 0

    def __len__(self) -> int:
        return self.end - self.start


EMPTY_SPAN = Span(0, 0)


@dataclass(frozen=True)
class Annotation:
    """A bracketed semantic tag such as ``[role=enforcer]``."""

    text: str
    scope: AnnotationScope = AnnotationScope.COMPONENT
    span: Span = field(default=EMPTY_SPAN, compare=False)

    def render(self) -> str:
        return f"[{self.text}]"


class CombinationKind(Enum):
    # operators inside one component's parentheses: I(a [AND] b)
    WITHIN_COMPONENT = "withinComponent"
    # operators between braced components of one symbol: Cac{Cac{..} [AND] Cac{..}}
    NESTED_COMPONENTS = "nestedComponents"
    # operators between component groups: {I(a) Bdir(b) [XOR] I(c) Bdir(d)}
    COMPONENT_PAIR = "componentPair"


# a fragment of component content: literal text or an inline combination group
ContentFragment = Union[str, "Combination"]

# one branch of a combination; the variant depends on the combination kind
CombinationChild = Union[
    tuple,            # WITHIN_COMPONENT: a fragment sequence
    "Combination",    # WITHIN_COMPONENT: a nested group used directly
    "Component",      # NESTED_COMPONENTS
    "StatementTree",  # COMPONENT_PAIR
]


@dataclass(frozen=True)
class Combination:
    """A logical combination of two or more alternatives."""

    operator: LogicalOperator
    children: tuple[CombinationChild, ...]
    kind: CombinationKind
    span: Span = field(default=EMPTY_SPAN, compare=False)


@dataclass(frozen=True)
class Component:
    """One coded component: ``X(content)`` or ``X{nested}``.

    Exactly one of ``content`` and ``nested`` is set.  ``content`` holds
    the fragment sequence of a parenthesized body; ``nested`` holds the
    full statement or combination found between braces.
    """

    symbol: ComponentSymbol
    annotation: Annotation | None = None
    content: tuple[ContentFragment, ...] | None = None
    nested: Union["StatementTree", Combination, None] = None
    span: Span = field(default=EMPTY_SPAN, compare=False)

    @property
    def is_nested(self) -> bool:
        return self.nested is not None


@dataclass(frozen=True)
class FreeText:
    """Uncoded prose between components, kept verbatim."""

    text: str
    span: Span = field(default=EMPTY_SPAN, compare=False)


# a top-level element of a statement; bare Combination elements are
# component pairs, bare Annotation elements are statement-level tags
Element = Union[Component, Combination, Annotation, FreeText]


@dataclass(frozen=True)
class StatementTree:
    """Parsed form of one coded statement."""

    elements: tuple[Element, ...]
    span: Span = field(default=EMPTY_SPAN, compare=False)

    def components(self) -> list[Component]:
        """Top-level components in source order."""
        return [e for e in self.elements if isinstance(e, Component)]


class _NestMarker:
    """Singleton path segment marking a descent into a nested statement."""

    _instance: "_NestMarker | None" = None

    def __new__(cls) -> "_NestMarker":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEST"


NEST = _NestMarker()

PathSegment = Union[int, _NestMarker]

# rendered form: BASE, BASE.1, {BASE.1}.2, {{BASE.1}.2}.3 and so on
ID_PATTERN = re.compile(
    r"^(\{)*[^.{}]+(\.[0-9]+|\}\.[0-9]+)*$")


@dataclass(frozen=True)
class SubStatementId:
    """Hierarchical identifier of an expanded atomic statement.

    ``path`` is read left to right: an ``int`` appends ``.k`` to the
    rendered id, ``NEST`` wraps everything so far in braces.  Example:
    base ``123`` with path ``(1, NEST, 1)`` renders as ``{123.1}.1``.
    """

    base: str
    path: tuple[PathSegment, ...] = ()

    def __post_init__(self) -> None:
        # braces would collide with the nesting syntax; dots merely make
        # the rendered form ambiguous for parse(), which is documented
        if not self.base or "{" in self.base or "}" in self.base:
            raise ValueError(f"invalid id base {self.base!r}")
        for i, seg in enumerate(self.path):
            if seg is NEST:
                nxt = self.path[i + 1] if i + 1 < len(self.path) else None
                if not isinstance(nxt, int):
                    raise ValueError("nesting marker must be followed by an index")
            elif isinstance(seg, int):
                if seg < 1:
                    raise ValueError("expansion indices start at 1")
            else:
                raise TypeError(f"bad path segment {seg!r}")

    def child(self, k: int) -> "SubStatementId":
        """Id of the k-th expansion alternative (1-based)."""
        return SubStatementId(self.base, self.path + (k,))

    def nested(self, k: int) -> "SubStatementId":
        """Id of the k-th sub-statement nested under this statement."""
        return SubStatementId(self.base, self.path + (NEST, k))

    @property
    def is_nested(self) -> bool:
        return any(seg is NEST for seg in self.path)

    @property
    def depth(self) -> int:
        return sum(1 for seg in self.path if seg is NEST)

    def render(self) -> str:
        out = self.base
        for seg in self.path:
            if seg is NEST:
                out = "{" + out + "}"
            else:
                out = f"{out}.{seg}"
        return out

    @classmethod
    def parse(cls, text: str) -> "SubStatementId":
        """Inverse of :meth:`render` for well-formed ids."""
        if not ID_PATTERN.match(text):
            raise ValueError(f"malformed sub-statement id {text!r}")
        opens = 0
        i = 0
        while i < len(text) and text[i] == "{":
            opens += 1
            i += 1
        j = i
        while j < len(text) and text[j] not in ".}":
            j += 1
        base = text[i:j]
        path: list[PathSegment] = []
        while j < len(text):
            if text[j] == ".":
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ValueError(f"malformed sub-statement id {text!r}")
                path.append(int(text[j + 1:k]))
                j = k
            elif text[j] == "}":
                if opens == 0:
                    raise ValueError(f"malformed sub-statement id {text!r}")
                opens -= 1
                path.append(NEST)
                j += 1
            else:
                raise ValueError(f"malformed sub-statement id {text!r}")
        if opens != 0:
            raise ValueError(f"malformed sub-statement id {text!r}")
        return cls(base, tuple(path))

    def __str__(self) -> str:
        return self.render()


def render_id(sid: SubStatementId) -> str:
    return sid.render()


@dataclass(frozen=True)
class CellValue:
    """One value of an atomic statement cell.

    Either literal ``text`` or a ``ref`` to a nested sub-statement id.
    """

    text: str | None = None
    ref: SubStatementId | None = None
    annotation: str | None = None

    def rendered(self, include_annotations: bool = False) -> str:
        body = self.ref.render() if self.ref is not None else (self.text or "")
        if include_annotations and self.annotation:
            return f"{body} [{self.annotation}]"
        return body


@dataclass(frozen=True)
class AtomicStatement:
    """One fully alternative-free row produced by expansion.

    ``cells`` maps component codes to value tuples; ``linkage`` lists
    sibling atoms this one is logically linked to, in emission order.
    """

    id: SubStatementId
    cells: dict[str, tuple[CellValue, ...]]
    linkage: tuple[tuple[LogicalOperator, SubStatementId], ...] = ()
    statement_annotations: tuple[str, ...] = ()

    @property
    def is_nested(self) -> bool:
        return self.id.is_nested
