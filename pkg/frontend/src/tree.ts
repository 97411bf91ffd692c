/**
 * View model for the collapsible statement tree.
 *
 * Nodes are identified by their path in the document ("r", "r.0",
 * "r.0.2", ...). Paths are only stable within one document, which is
 * exactly the lifetime of the collapse state: a new parse result gets
 * a fresh empty set.
 */

import type { TreeNode } from './api.js';

export interface VisibleRow {
  id: string;
  node: TreeNode;
  depth: number;
  /** true for nodes folded out of a carrier's properties list */
  isProperty: boolean;
  hasChildren: boolean;
  collapsed: boolean;
  /** descendants hidden by collapsing this row (0 when expanded) */
  hiddenCount: number;
}

/** Total nodes in the subtree, attached properties included. */
export function countNodes(node: TreeNode): number {
  let total = 1;
  for (const p of node.properties) total += countNodes(p);
  for (const c of node.children) total += countNodes(c);
  return total;
}

function childEntries(node: TreeNode): { node: TreeNode; prop: boolean }[] {
  return [
    ...node.properties.map((p) => ({ node: p, prop: true })),
    ...node.children.map((c) => ({ node: c, prop: false })),
  ];
}

/** Depth-first list of rows to render, honoring collapsed subtrees. */
export function flatten(
  root: TreeNode,
  collapsed: ReadonlySet<string>,
): VisibleRow[] {
  const rows: VisibleRow[] = [];
  const walk = (node: TreeNode, id: string, depth: number, prop: boolean) => {
    const entries = childEntries(node);
    const isCollapsed = collapsed.has(id) && entries.length > 0;
    rows.push({
      id,
      node,
      depth,
      isProperty: prop,
      hasChildren: entries.length > 0,
      collapsed: isCollapsed,
      hiddenCount: isCollapsed ? countNodes(node) - 1 : 0,
    });
    if (isCollapsed) return;
    entries.forEach((entry, i) =>
      walk(entry.node, `${id}.${i}`, depth + 1, entry.prop),
    );
  };
  walk(root, 'r', 0, false);
  return rows;
}

/** Toggle one node; applying it twice restores the original set. */
export function toggleNode(
  collapsed: ReadonlySet<string>,
  id: string,
): Set<string> {
  const next = new Set(collapsed);
  if (next.has(id)) next.delete(id);
  else next.add(id);
  return next;
}

/** Fresh state for a new parse result. */
export function resetCollapsed(): Set<string> {
  return new Set();
}
