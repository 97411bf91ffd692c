"""Independent reference implementations used to check the package.

These deliberately avoid the package's own expansion, quoting and
balancing code paths: counting is done by plain string enumeration
over the parsed tree, CSV rows are split by a stand-alone quote-aware
scanner, and bracket balance by a character sweep.
"""

from __future__ import annotations

import itertools

from igscript import Annotation, Combination, Component, FreeText, StatementTree


def content_variants(frags) -> list[str]:
    """All alternative readings of a component body, by string product."""
    lists = []
    for f in frags:
        if isinstance(f, str):
            lists.append([f])
        else:
            lists.append(combination_variants(f))
    return ["".join(p) for p in itertools.product(*lists)]


def combination_variants(comb: Combination) -> list[str]:
    out: list[str] = []
    for child in comb.children:
        if isinstance(child, Combination):
            out.extend(combination_variants(child))
        else:
            out.extend(content_variants(child))
    return out


def top_level_variants(tree: StatementTree) -> list[tuple[str, ...]]:
    """Alternative-free top-level statements as value tuples.

    Nested components contribute exactly one slot value (they never
    multiply the host); component pairs contribute one alternative per
    branch variant.
    """
    slots: list[list[tuple[str, ...]]] = []
    for el in tree.elements:
        if isinstance(el, (FreeText, Annotation)):
            continue
        if isinstance(el, Component):
            if el.nested is not None:
                slots.append([("<nested>",)])
            else:
                slots.append([(v,) for v in content_variants(el.content or ())])
        elif isinstance(el, Combination):
            branch_variants: list[tuple[str, ...]] = []
            for branch in el.children:
                branch_variants.extend(top_level_variants(branch))
            slots.append(branch_variants)
    out = []
    for combo in itertools.product(*slots):
        flat: tuple[str, ...] = ()
        for part in combo:
            flat += part
        out.append(flat)
    return out


def top_level_count(tree: StatementTree) -> int:
    return len(top_level_variants(tree))


def split_row(line: str, delimiter: str = "|") -> list[str]:
    """Quote-aware field splitter (stand-alone, not the csv module)."""
    fields: list[str] = []
    cur: list[str] = []
    i = 0
    in_quotes = False
    field_start = True
    while i < len(line):
        c = line[i]
        if in_quotes:
            if c == '"':
                if i + 1 < len(line) and line[i + 1] == '"':
                    cur.append('"')
                    i += 2
                    continue
                in_quotes = False
                i += 1
                continue
            cur.append(c)
            i += 1
            continue
        if c == '"' and field_start:
            in_quotes = True
            field_start = False
            i += 1
            continue
        if c == delimiter:
            fields.append("".join(cur))
            cur = []
            field_start = True
            i += 1
            continue
        cur.append(c)
        field_start = False
        i += 1
    fields.append("".join(cur))
    return fields


def first_unbalanced(text: str) -> int | None:
    """Offset of the first unbalanced ( ) { } [ ], by character sweep.

    Good enough for crafted fixtures; makes no attempt to understand
    operator brackets or annotations.
    """
    stack: list[tuple[str, int]] = []
    pairs = {")": "(", "}": "{", "]": "["}
    for i, c in enumerate(text):
        if c in "({[":
            stack.append((c, i))
        elif c in ")}]":
            if not stack or stack[-1][0] != pairs[c]:
                return i
            stack.pop()
    if stack:
        return stack[0][1]
    return None


def brace_depth(text: str) -> int:
    """Maximum {} nesting depth of a string, by character sweep."""
    depth = 0
    best = 0
    for c in text:
        if c == "{":
            depth += 1
            best = max(best, depth)
        elif c == "}":
            depth = max(0, depth - 1)
    return best
