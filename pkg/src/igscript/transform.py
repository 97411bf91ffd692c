"""Statement transformations: expansion, level filtering, reordering.

Expansion turns one statement tree into alternative-free atomic
statements.  Every combination contributes one choice dimension; the
Cartesian product over all dimensions yields the atoms, with the
leftmost combination varying slowest.  Component pairs choose whole
component groups, so each atom contains exactly one pair branch.

Nested statements do not multiply their host: at Extended and above
each host atom emits the nested statement's own rows right below
itself and references them by id, while at Core the nested statement
collapses into operator-free reading texts stored as extra cell
values.

Two sibling atoms are logically linked when they differ in exactly one
shared choice, and the recorded operator is the one at the combination
node where their alternatives branch apart.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, Union

from .model import (
    Annotation,
    AnnotationScope,
    AtomicStatement,
    CellValue,
    Combination,
    CombinationKind,
    Component,
    ContentFragment,
    Element,
    FreeText,
    Level,
    LogicalOperator,
    StatementTree,
    SubStatementId,
)

NestedBody = Union[StatementTree, Combination]


@dataclass(frozen=True)
class ExpansionResult:
    atoms: tuple[AtomicStatement, ...]
    warnings: tuple[str, ...] = ()


# -- alternative sets for component content ----------------------------------


@dataclass
class _AltSet:
    texts: list[str]
    # ops[(i, j)] with i < j: operator linking alternatives that differ
    # in exactly one underlying branch choice
    ops: dict[tuple[int, int], LogicalOperator]


def _alts_of_combination(comb: Combination) -> _AltSet:
    blocks = []
    for child in comb.children:
        if isinstance(child, Combination):
            blocks.append(_alts_of_combination(child))
        else:
            blocks.append(_alts_of_fragments(child))
    texts: list[str] = []
    ops: dict[tuple[int, int], LogicalOperator] = {}
    offsets: list[int] = []
    for block in blocks:
        off = len(texts)
        offsets.append(off)
        for (i, j), op in block.ops.items():
            ops[(off + i, off + j)] = op
        texts.extend(block.texts)
    for bi in range(len(blocks)):
        for bj in range(bi + 1, len(blocks)):
            for i in range(offsets[bi], offsets[bi] + len(blocks[bi].texts)):
                for j in range(offsets[bj],
                               offsets[bj] + len(blocks[bj].texts)):
                    ops[(i, j)] = comb.operator
    return _AltSet(texts, ops)


def _alts_of_fragments(frags: tuple[ContentFragment, ...]) -> _AltSet:
    subs = [_alts_of_combination(f) for f in frags
            if isinstance(f, Combination)]
    if not subs:
        return _AltSet(["".join(frags)], {})  # type: ignore[arg-type]
    vectors = list(itertools.product(*(range(len(s.texts)) for s in subs)))
    texts = []
    for vec in vectors:
        parts = []
        g = 0
        for f in frags:
            if isinstance(f, str):
                parts.append(f)
            else:
                parts.append(subs[g].texts[vec[g]])
                g += 1
        texts.append("".join(parts))
    ops: dict[tuple[int, int], LogicalOperator] = {}
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            diff = [s for s in range(len(subs))
                    if vectors[a][s] != vectors[b][s]]
            if len(diff) != 1:
                continue
            s = diff[0]
            op = subs[s].ops.get((vectors[a][s], vectors[b][s]))
            if op is not None:
                ops[(a, b)] = op
    return _AltSet(texts, ops)


# -- choice enumeration over one statement ------------------------------------


@dataclass
class _Part:
    code: str
    text: str | None = None
    readings: list[str] | None = None
    nested: NestedBody | None = None
    ann: str | None = None


@dataclass
class _Proto:
    parts: list[_Part]
    dims: dict[int, int]
    anns: list[str]


_LinkFn = Callable[[int, int], "LogicalOperator | None"]


def _protos(elements: tuple[Element, ...], level: Level,
            registry: dict[int, _LinkFn]) -> list[_Proto]:
    out: list[_Proto] = []

    def walk(els: tuple[Element, ...], k: int, parts: list[_Part],
             dims: dict[int, int], anns: list[str]) -> None:
        if k == len(els):
            out.append(_Proto(list(parts), dict(dims), list(anns)))
            return
        el = els[k]
        if isinstance(el, FreeText):
            walk(els, k + 1, parts, dims, anns)
            return
        if isinstance(el, Annotation):
            if level is Level.LOGICO:
                anns.append(el.text)
                walk(els, k + 1, parts, dims, anns)
                anns.pop()
            else:
                walk(els, k + 1, parts, dims, anns)
            return
        if isinstance(el, Combination):
            # component pair: substitute one branch, keep scanning there
            key = id(el)
            registry[key] = lambda i, j, op=el.operator: op
            for b, branch in enumerate(el.children):
                assert isinstance(branch, StatementTree)
                merged = els[:k] + branch.elements + els[k + 1:]
                dims[key] = b
                walk(merged, k, parts, dims, anns)
            dims.pop(key, None)
            return
        assert isinstance(el, Component)
        ann = el.annotation.text if (level is Level.LOGICO
                                     and el.annotation) else None
        if el.nested is not None:
            if level is Level.CORE:
                part = _Part(el.symbol.code,
                             readings=_core_readings(el.nested))
            else:
                part = _Part(el.symbol.code, nested=el.nested, ann=ann)
            parts.append(part)
            walk(els, k + 1, parts, dims, anns)
            parts.pop()
            return
        alts = _alts_of_fragments(el.content or ())
        if len(alts.texts) == 1:
            parts.append(_Part(el.symbol.code, text=alts.texts[0], ann=ann))
            walk(els, k + 1, parts, dims, anns)
            parts.pop()
            return
        key = id(el)
        registry[key] = lambda i, j, a=alts: a.ops.get((i, j))
        for c, text in enumerate(alts.texts):
            parts.append(_Part(el.symbol.code, text=text, ann=ann))
            dims[key] = c
            walk(els, k + 1, parts, dims, anns)
            parts.pop()
        dims.pop(key, None)

    walk(elements, 0, [], {}, [])
    return out


def _link_pairs(protos: list[_Proto],
                registry: dict[int, _LinkFn]
                ) -> list[tuple[int, int, LogicalOperator]]:
    out = []
    for i in range(len(protos)):
        for j in range(i + 1, len(protos)):
            shared = protos[i].dims.keys() & protos[j].dims.keys()
            diff = [d for d in shared
                    if protos[i].dims[d] != protos[j].dims[d]]
            if len(diff) != 1:
                continue
            d = diff[0]
            a, b = protos[i].dims[d], protos[j].dims[d]
            op = registry[d](min(a, b), max(a, b))
            if op is not None:
                out.append((i, j, op))
    return out


# -- nested combination flattening ---------------------------------------------


def _flatten_comb(comb: Combination) -> tuple[
        list[tuple[Element, ...]], dict[tuple[int, int], LogicalOperator]]:
    """Leaf statements of a braced combination plus their pairwise operators.

    The operator between two leaves is the one at the node where their
    branches diverge.
    """
    blocks: list[tuple[list[tuple[Element, ...]],
                       dict[tuple[int, int], LogicalOperator]]] = []
    for child in comb.children:
        if isinstance(child, StatementTree):
            blocks.append(([child.elements], {}))
        elif isinstance(child, Component):
            if isinstance(child.nested, Combination):
                blocks.append(_flatten_comb(child.nested))
            elif isinstance(child.nested, StatementTree):
                elements = child.nested.elements
                if child.annotation is not None:
                    # keep the branch's own tag on its rows
                    tag = Annotation(child.annotation.text,
                                     AnnotationScope.STATEMENT)
                    elements = (tag,) + elements
                blocks.append(([elements], {}))
            else:
                blocks.append(([(child,)], {}))
        else:  # a fragment tuple cannot appear under a braced combination
            raise TypeError(f"unexpected combination child {child!r}")
    leaves: list[tuple[Element, ...]] = []
    ops: dict[tuple[int, int], LogicalOperator] = {}
    offsets = []
    for b_leaves, b_ops in blocks:
        off = len(leaves)
        offsets.append(off)
        for (i, j), op in b_ops.items():
            ops[(off + i, off + j)] = op
        leaves.extend(b_leaves)
    for bi in range(len(blocks)):
        for bj in range(bi + 1, len(blocks)):
            for i in range(offsets[bi], offsets[bi] + len(blocks[bi][0])):
                for j in range(offsets[bj],
                               offsets[bj] + len(blocks[bj][0])):
                    ops[(i, j)] = comb.operator
    return leaves, ops


# -- operator-free readings (Core view of nested statements) -------------------


def _core_readings(nested: NestedBody) -> list[str]:
    if isinstance(nested, StatementTree):
        return _readings_of_elements(nested.elements)
    leaves, _ = _flatten_comb(nested)
    out: list[str] = []
    for leaf in leaves:
        out.extend(_readings_of_elements(leaf))
    return out


def _readings_of_elements(elements: tuple[Element, ...]) -> list[str]:
    slots: list[list[str]] = []
    for el in elements:
        if isinstance(el, FreeText):
            slots.append([el.text])
        elif isinstance(el, Annotation):
            continue
        elif isinstance(el, Combination):
            branch_readings: list[str] = []
            for branch in el.children:
                assert isinstance(branch, StatementTree)
                branch_readings.extend(_readings_of_elements(branch.elements))
            slots.append(branch_readings)
        else:
            assert isinstance(el, Component)
            if el.nested is not None:
                slots.append(_core_readings(el.nested))
            else:
                slots.append(_alts_of_fragments(el.content or ()).texts)
    readings = []
    for combo in itertools.product(*slots):
        readings.append(" ".join(p for p in combo if p))
    return readings


# -- row emission ---------------------------------------------------------------


@dataclass
class _Row:
    sid: SubStatementId
    cells: dict[str, list[CellValue]] = field(default_factory=dict)
    links: list[tuple[LogicalOperator, SubStatementId]] = field(
        default_factory=list)
    anns: list[str] = field(default_factory=list)


class _Emitter:
    def __init__(self, level: Level) -> None:
        self.level = level
        self.rows: list[_Row] = []
        self.index: dict[str, _Row] = {}

    def block(self, elements: tuple[Element, ...],
              alloc: Callable[[], SubStatementId]) -> list[SubStatementId]:
        registry: dict[int, _LinkFn] = {}
        protos = _protos(elements, self.level, registry)
        block_rows: list[_Row] = []
        for proto in protos:
            sid = alloc()
            row = _Row(sid, anns=list(proto.anns))
            block_rows.append(row)
            self.rows.append(row)
            self.index[sid.render()] = row
            counter = itertools.count(1)
            sub_alloc = lambda s=sid, c=counter: s.nested(next(c))
            for part in proto.parts:
                values = row.cells.setdefault(part.code, [])
                if part.nested is not None:
                    refs = self.nested(part.nested, sub_alloc)
                    values.extend(CellValue(ref=r, annotation=part.ann)
                                  for r in refs)
                elif part.readings is not None:
                    values.extend(CellValue(text=t) for t in part.readings)
                else:
                    values.append(CellValue(text=part.text,
                                            annotation=part.ann))
        for i, j, op in _link_pairs(protos, registry):
            block_rows[i].links.append((op, block_rows[j].sid))
            block_rows[j].links.append((op, block_rows[i].sid))
        return [r.sid for r in block_rows]

    def nested(self, body: NestedBody,
               alloc: Callable[[], SubStatementId]) -> list[SubStatementId]:
        if isinstance(body, StatementTree):
            return self.block(body.elements, alloc)
        leaves, ops = _flatten_comb(body)
        leaf_ids = [self.block(leaf, alloc) for leaf in leaves]
        for (i, j), op in ops.items():
            for a in leaf_ids[i]:
                for b in leaf_ids[j]:
                    self.index[a.render()].links.append((op, b))
                    self.index[b.render()].links.append((op, a))
        return [sid for ids in leaf_ids for sid in ids]


def expand(tree: StatementTree, base_id: str = "1",
           level: Level = Level.LOGICO) -> ExpansionResult:
    """Expand a statement into alternative-free atomic statements.

    Top-level atoms get ids ``base.1 .. base.n``; a statement that
    expands to a single row with no nested rows keeps the bare base id.
    Rows of a nested statement follow their host and use the host's id
    in braces as prefix, for example ``{base.1}.2``.
    """
    base = SubStatementId(base_id)
    registry: dict[int, _LinkFn] = {}
    protos = _protos(tree.elements, level, registry)
    has_nested = level >= Level.EXTENDED and any(
        p.nested is not None for proto in protos for p in proto.parts)
    single = len(protos) == 1 and not has_nested

    emitter = _Emitter(level)
    counter = itertools.count(1)
    alloc = (lambda: base) if single else (lambda: base.child(next(counter)))
    emitter.block(tree.elements, alloc)

    order = {row.sid.render(): k for k, row in enumerate(emitter.rows)}
    atoms = []
    for row in emitter.rows:
        links = tuple(sorted(row.links,
                             key=lambda lk: order[lk[1].render()]))
        cells = {code: tuple(vals) for code, vals in row.cells.items()}
        atoms.append(AtomicStatement(row.sid, cells, links,
                                     tuple(row.anns)))
    return ExpansionResult(tuple(atoms))


# -- level filtering -------------------------------------------------------------


def filter_level(tree: StatementTree, level: Level) -> StatementTree:
    """Project a statement down to a level of expressiveness.

    Logico is the identity.  Extended drops semantic annotations.  Core
    additionally flattens nested statements into plain component content
    and inlines the branches of component pairs, so the result uses no
    braces at all.
    """
    if level is Level.LOGICO:
        return tree
    stripped = _strip_annotations(tree)
    if level is Level.EXTENDED:
        return stripped
    return _flatten_tree(stripped)


def _strip_annotations(tree: StatementTree) -> StatementTree:
    elements: list[Element] = []
    for el in tree.elements:
        if isinstance(el, Annotation):
            continue
        if isinstance(el, Component):
            nested = el.nested
            if isinstance(nested, StatementTree):
                nested = _strip_annotations(nested)
            elif isinstance(nested, Combination):
                nested = _strip_comb(nested)
            elements.append(replace(el, annotation=None, nested=nested))
        elif isinstance(el, Combination):
            children = tuple(_strip_annotations(b) for b in el.children)
            elements.append(replace(el, children=children))
        else:
            elements.append(el)
    return replace(tree, elements=tuple(elements))


def _strip_comb(comb: Combination) -> Combination:
    children: list = []
    for child in comb.children:
        if isinstance(child, StatementTree):
            children.append(_strip_annotations(child))
        elif isinstance(child, Component):
            nested = child.nested
            if isinstance(nested, StatementTree):
                nested = _strip_annotations(nested)
            elif isinstance(nested, Combination):
                nested = _strip_comb(nested)
            children.append(replace(child, annotation=None, nested=nested))
        else:
            children.append(child)
    return replace(comb, children=tuple(children))


def _flatten_tree(tree: StatementTree) -> StatementTree:
    elements: list[Element] = []
    for el in tree.elements:
        if isinstance(el, Component):
            if el.nested is None:
                elements.append(el)
            else:
                elements.append(Component(el.symbol,
                                          content=_flat_content(el.nested)))
        elif isinstance(el, Combination):
            # inline every pair branch in order; the choice is gone at Core
            for branch in el.children:
                assert isinstance(branch, StatementTree)
                elements.extend(_flatten_tree(branch).elements)
        elif isinstance(el, FreeText):
            elements.append(el)
    return replace(tree, elements=tuple(elements))


def _flat_content(nested: NestedBody) -> tuple[ContentFragment, ...]:
    if isinstance(nested, StatementTree):
        return _stmt_fragments(_flatten_tree(nested))
    return (_comb_to_group(nested),)


def _comb_to_group(comb: Combination) -> Combination:
    children: list = []
    for child in comb.children:
        if isinstance(child, StatementTree):
            frags: tuple[ContentFragment, ...] = _stmt_fragments(
                _flatten_tree(child))
        elif isinstance(child, Component):
            if child.nested is not None:
                frags = _flat_content(child.nested)
            else:
                frags = child.content or ()
        else:
            frags = child
        if len(frags) == 1 and isinstance(frags[0], Combination):
            children.append(frags[0])
        else:
            children.append(frags)
    return Combination(comb.operator, tuple(children),
                       CombinationKind.WITHIN_COMPONENT)


def _stmt_fragments(tree: StatementTree) -> tuple[ContentFragment, ...]:
    frags: list[ContentFragment] = []

    def add_text(s: str) -> None:
        if frags and isinstance(frags[-1], str):
            frags[-1] += s
        elif s:
            frags.append(s)

    first = True
    for el in tree.elements:
        if not first:
            add_text(" ")
        first = False
        if isinstance(el, FreeText):
            add_text(el.text)
        elif isinstance(el, Component):
            for f in el.content or ():
                if isinstance(f, str):
                    add_text(f)
                else:
                    frags.append(f)
    return tuple(frags)


# -- small public helpers ---------------------------------------------------------


def reorder_conditions(tree: StatementTree) -> StatementTree:
    """Move activation conditions in front of the other elements.

    The relative order within each partition is preserved; applying the
    function twice changes nothing.
    """
    cond = [el for el in tree.elements
            if isinstance(el, Component) and el.symbol.code == "Cac"]
    rest = [el for el in tree.elements
            if not (isinstance(el, Component) and el.symbol.code == "Cac")]
    return replace(tree, elements=tuple(cond + rest))


def degree_of_variability(tree: StatementTree) -> int:
    """Number of alternative-free statements the tree encodes at Core."""
    return len(expand(tree, "1", Level.CORE).atoms)
