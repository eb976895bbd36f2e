/**
 * Deterministic left-to-right layout for a pathway graph.
 *
 * Column = fewest hops from any entry node (breadth-first over edge
 * direction); nodes nothing reaches sit in a trailing column. Within a
 * column, nodes keep document order. Pure arithmetic: no text measuring,
 * so it behaves identically in a browser and in jsdom.
 */
import type { GraphDoc } from "./types.js";

export const NODE_W = 172;
export const NODE_H = 56;
const COL_GAP = 84;
const ROW_GAP = 30;
const MARGIN = 26;

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  /** Node id to centre point. */
  positions: Map<string, Point>;
  width: number;
  height: number;
}

export function layoutGraph(doc: GraphDoc): Layout {
  const outgoing = new Map<string, string[]>();
  for (const edge of doc.edges) {
    const targets = outgoing.get(edge.from);
    if (targets) targets.push(edge.to);
    else outgoing.set(edge.from, [edge.to]);
  }

  const depth = new Map<string, number>();
  const queue: string[] = [];
  for (const entry of doc.entryPoints) {
    if (!depth.has(entry.node)) {
      depth.set(entry.node, 0);
      queue.push(entry.node);
    }
  }
  while (queue.length > 0) {
    const node = queue.shift() as string;
    const next = (depth.get(node) as number) + 1;
    for (const target of outgoing.get(node) ?? []) {
      if (!depth.has(target)) {
        depth.set(target, next);
        queue.push(target);
      }
    }
  }

  let maxDepth = 0;
  for (const d of depth.values()) maxDepth = Math.max(maxDepth, d);
  const orphanColumn = depth.size < doc.nodes.length ? maxDepth + 1 : maxDepth;

  const columns: string[][] = [];
  for (const node of doc.nodes) {
    const col = depth.get(node.id) ?? orphanColumn;
    while (columns.length <= col) columns.push([]);
    (columns[col] as string[]).push(node.id);
  }

  const rows = Math.max(1, ...columns.map((c) => c.length));
  const height = MARGIN * 2 + rows * NODE_H + (rows - 1) * ROW_GAP;
  const width = MARGIN * 2 + columns.length * NODE_W + (columns.length - 1) * COL_GAP;

  const positions = new Map<string, Point>();
  columns.forEach((ids, col) => {
    const x = MARGIN + col * (NODE_W + COL_GAP) + NODE_W / 2;
    const columnHeight = ids.length * NODE_H + (ids.length - 1) * ROW_GAP;
    const top = (height - columnHeight) / 2;
    ids.forEach((id, row) => {
      positions.set(id, { x, y: top + row * (NODE_H + ROW_GAP) + NODE_H / 2 });
    });
  });

  return { positions, width, height };
}
