// The binary-tree keyboard state machine, applied to the nav model shipped
// inside every navigable document. This mirrors the compile service's own
// semantics exactly; the service embeds the model, the browser runs it.
//
//   right_right  expand the cursor, move to its first child (left if both)
//   left_left    collapse the cursor and its siblings, move to the parent
//   up / down    prior/next sibling, falling back to the prior/next node at
//                the same level across parents; landing under a collapsed
//                parent expands the ancestor chain
//
// Unreachable moves return the state unchanged; the cursor's ancestors are
// always in the expanded set, and only internal nodes are ever expanded.

export type NavCommandName = "right_right" | "left_left" | "up" | "down";

export interface NavNode {
  id: string;
  value: string;
  depth: number;
  position: "root" | "left" | "right";
  parent: string | null;
  left: string | null;
  right: string | null;
}

export interface NavModel {
  nodes: NavNode[];
  initial_cursor: string;
}

export interface NavState {
  cursor: string;
  expanded: ReadonlySet<string>;
}

export class TreeIndex {
  readonly byId = new Map<string, NavNode>();
  private readonly levels = new Map<number, string[]>();

  constructor(model: NavModel) {
    for (const node of model.nodes) {
      this.byId.set(node.id, node);
    }
    // Left-to-right order within each depth via BFS over (left, right).
    const queue = [model.initial_cursor];
    while (queue.length > 0) {
      const id = queue.shift()!;
      const node = this.byId.get(id);
      if (!node) continue;
      const row = this.levels.get(node.depth) ?? [];
      row.push(id);
      this.levels.set(node.depth, row);
      if (node.left !== null) queue.push(node.left);
      if (node.right !== null) queue.push(node.right);
    }
  }

  node(id: string): NavNode {
    const node = this.byId.get(id);
    if (!node) throw new Error(`unknown node ${id}`);
    return node;
  }

  children(id: string): string[] {
    const node = this.node(id);
    return [node.left, node.right].filter((c): c is string => c !== null);
  }

  isLeaf(id: string): boolean {
    return this.children(id).length === 0;
  }

  ancestors(id: string): string[] {
    const out: string[] = [];
    let current = this.node(id).parent;
    while (current !== null) {
      out.push(current);
      current = this.node(current).parent;
    }
    return out;
  }

  sibling(id: string, offset: number): string | null {
    const parent = this.node(id).parent;
    if (parent === null) return null;
    const siblings = this.children(parent);
    const at = siblings.indexOf(id) + offset;
    return at >= 0 && at < siblings.length ? siblings[at]! : null;
  }

  levelNeighbor(id: string, offset: number): string | null {
    const row = this.levels.get(this.node(id).depth) ?? [];
    const at = row.indexOf(id) + offset;
    return at >= 0 && at < row.length ? row[at]! : null;
  }
}

export function initialState(model: NavModel): NavState {
  const index = new TreeIndex(model);
  const root = model.initial_cursor;
  return {
    cursor: root,
    expanded: new Set(index.isLeaf(root) ? [] : [root]),
  };
}

export function navStep(model: NavModel, state: NavState, cmd: NavCommandName): NavState {
  const index = new TreeIndex(model);
  const cursor = state.cursor;

  if (cmd === "right_right") {
    const kids = index.children(cursor);
    if (kids.length === 0) return state;
    return { cursor: kids[0]!, expanded: new Set([...state.expanded, cursor]) };
  }

  if (cmd === "left_left") {
    const parent = index.node(cursor).parent;
    if (parent === null) return state;
    const generation = new Set(index.children(parent));
    const expanded = new Set([...state.expanded].filter((id) => !generation.has(id)));
    return { cursor: parent, expanded };
  }

  const offset = cmd === "up" ? -1 : 1;
  const target = index.sibling(cursor, offset) ?? index.levelNeighbor(cursor, offset);
  if (target === null) return state;
  return {
    cursor: target,
    expanded: new Set([...state.expanded, ...index.ancestors(target)]),
  };
}
