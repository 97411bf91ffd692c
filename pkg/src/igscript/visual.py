"""Hierarchical tree documents for statement visualization.

The tree document is a versioned, JSON-serializable structure the
webapp renders client-side.  The root is labeled with the whole
statement; every coded element becomes a subtree.  A component whose
content is one combination collapses into a single operator node, so
``I(fine [AND] report)`` shows up as an AND node with two leaves.
Free text is part of the root label but gets no node of its own.

Layout is the client's job; the canvas size is a pass-through hint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .model import (
    Annotation,
    Combination,
    Component,
    Element,
    Level,
    StatementTree,
)
from .parser import serialize
from .transform import degree_of_variability, expand, reorder_conditions

TREE_DOC_VERSION = 1
DEFAULT_CANVAS = (1200, 800)


@dataclass
class TreeNode:
    label: str
    symbol: str | None = None
    annotation: str | None = None
    operator: str | None = None
    children: list["TreeNode"] = field(default_factory=list)
    properties: list["TreeNode"] = field(default_factory=list)

    def to_dict(self) -> dict:
        out: dict = {"label": self.label}
        if self.symbol is not None:
            out["symbol"] = self.symbol
        if self.annotation is not None:
            out["annotation"] = self.annotation
        if self.operator is not None:
            out["operator"] = self.operator
        out["children"] = [c.to_dict() for c in self.children]
        out["properties"] = [p.to_dict() for p in self.properties]
        return out

    def count(self) -> int:
        """Total nodes in this subtree, attached properties included."""
        return 1 + sum(c.count() for c in self.children) \
            + sum(p.count() for p in self.properties)

    def leaves(self) -> int:
        if not self.children and not self.properties:
            return 1
        return sum(c.leaves() for c in self.children) \
            + sum(p.leaves() for p in self.properties)


@dataclass(frozen=True)
class Metrics:
    degree_of_variability: int
    atom_count: int
    max_nesting_depth: int

    def to_dict(self) -> dict:
        return {
            "degreeOfVariability": self.degree_of_variability,
            "atomCount": self.atom_count,
            "maxNestingDepth": self.max_nesting_depth,
        }


@dataclass(frozen=True)
class TreeDoc:
    root: TreeNode
    metrics: Metrics
    canvas: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "version": TREE_DOC_VERSION,
            "root": self.root.to_dict(),
            "metrics": self.metrics.to_dict(),
            "canvas": {"width": self.canvas[0], "height": self.canvas[1]},
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


class _Builder:
    def __init__(self, include_annotations: bool,
                 include_properties: bool) -> None:
        self.include_annotations = include_annotations
        self.include_properties = include_properties

    def _ann(self, comp: Component) -> str | None:
        if self.include_annotations and comp.annotation is not None:
            return comp.annotation.text
        return None

    def statement_children(self, tree: StatementTree) -> list[TreeNode]:
        entries: list[tuple[Component | None, TreeNode]] = []
        for el in tree.elements:
            if isinstance(el, Component):
                entries.append((el, self.component(el)))
            elif isinstance(el, Combination):
                entries.append((None, self.pair(el)))
            # free text and statement annotations carry no node
        if not self.include_properties:
            self._attach_properties(entries)
        return [node for _, node in entries]

    def _attach_properties(
            self, entries: list[tuple[Component | None, TreeNode]]) -> None:
        """Move property nodes into the properties list of their carrier.

        The carrier is the closest sibling (preceding preferred) whose
        symbol is the property's parent; with no carrier the node stays
        a child.
        """
        moved: list[int] = []
        for idx, (el, node) in enumerate(entries):
            if el is None or not el.symbol.is_property:
                continue
            target = None
            for j in range(idx - 1, -1, -1):
                other = entries[j][0]
                if other is not None and j not in moved \
                        and other.symbol.code == el.symbol.parent_code:
                    target = entries[j][1]
                    break
            if target is None:
                for j in range(idx + 1, len(entries)):
                    other = entries[j][0]
                    if other is not None \
                            and other.symbol.code == el.symbol.parent_code:
                        target = entries[j][1]
                        break
            if target is not None:
                target.properties.append(node)
                moved.append(idx)
        for idx in reversed(moved):
            del entries[idx]

    def component(self, comp: Component) -> TreeNode:
        sym = comp.symbol.code
        ann = self._ann(comp)
        if isinstance(comp.nested, StatementTree):
            return TreeNode(comp.symbol.name, symbol=sym, annotation=ann,
                            children=self.statement_children(comp.nested))
        if isinstance(comp.nested, Combination):
            node = self.combination(comp.nested)
            node.symbol = sym
            node.annotation = ann
            return node
        frags = comp.content or ()
        if len(frags) == 1 and isinstance(frags[0], str):
            return TreeNode(frags[0], symbol=sym, annotation=ann)
        if len(frags) == 1 and isinstance(frags[0], Combination):
            node = self.group(frags[0])
            node.symbol = sym
            node.annotation = ann
            return node
        return TreeNode(comp.symbol.name, symbol=sym, annotation=ann,
                        children=[self.fragment(f) for f in frags])

    def fragment(self, frag) -> TreeNode:
        if isinstance(frag, str):
            return TreeNode(frag)
        return self.group(frag)

    def group(self, comb: Combination) -> TreeNode:
        children = []
        for child in comb.children:
            if isinstance(child, Combination):
                children.append(self.group(child))
            elif len(child) == 1 and isinstance(child[0], str):
                children.append(TreeNode(child[0]))
            else:
                children.append(TreeNode(
                    "", children=[self.fragment(f) for f in child]))
        return TreeNode(comb.operator.value, operator=comb.operator.value,
                        children=children)

    def combination(self, comb: Combination) -> TreeNode:
        children = []
        for child in comb.children:
            if isinstance(child, Component):
                children.append(self.component(child))
            else:
                assert isinstance(child, StatementTree)
                children.append(TreeNode(
                    "", children=self.statement_children(child)))
        return TreeNode(comb.operator.value, operator=comb.operator.value,
                        children=children)

    def pair(self, comb: Combination) -> TreeNode:
        return self.combination(comb)


def max_nesting_depth(tree: StatementTree) -> int:
    """Brace nesting depth of the statement's canonical serialization."""
    return _depth_elements(tree.elements)


def _depth_elements(elements: tuple[Element, ...]) -> int:
    depth = 0
    for el in elements:
        if isinstance(el, Component) and el.nested is not None:
            depth = max(depth, 1 + _depth_nested(el.nested))
        elif isinstance(el, Combination):
            inner = max((_depth_elements(b.elements) for b in el.children
                         if isinstance(b, StatementTree)), default=0)
            depth = max(depth, 1 + inner)
    return depth


def _depth_nested(nested) -> int:
    if isinstance(nested, StatementTree):
        return _depth_elements(nested.elements)
    assert isinstance(nested, Combination)
    depth = 0
    for child in nested.children:
        if isinstance(child, StatementTree):
            depth = max(depth, _depth_elements(child.elements))
        elif isinstance(child, Component) and child.nested is not None:
            depth = max(depth, 1 + _depth_nested(child.nested))
    return depth


def to_tree(tree: StatementTree, *,
            include_annotations: bool = False,
            include_properties: bool = True,
            conditions_first: bool = False,
            canvas_width: int = DEFAULT_CANVAS[0],
            canvas_height: int = DEFAULT_CANVAS[1]) -> TreeDoc:
    """Render a statement tree as a tree document."""
    display = reorder_conditions(tree) if conditions_first else tree
    builder = _Builder(include_annotations, include_properties)
    root = TreeNode(serialize(display),
                    children=builder.statement_children(display))
    if include_annotations:
        anns = [el.text for el in display.elements
                if isinstance(el, Annotation)]
        if anns:
            root.annotation = "; ".join(anns)
    metrics = Metrics(
        degree_of_variability=degree_of_variability(tree),
        atom_count=len(expand(tree, "1", Level.EXTENDED).atoms),
        max_nesting_depth=max_nesting_depth(tree),
    )
    return TreeDoc(root, metrics, (canvas_width, canvas_height))
