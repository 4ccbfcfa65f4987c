"""Screen-reader-navigable output and its keyboard state machine.

Arrays render as a standard list widget (one item per element, named
"Index i, value v"); binary trees render as nested lists in the ARIA tree
pattern, with expand/collapse on internal nodes. The keyboard semantics for
trees live here as a pure state machine over (tree, NavState, NavCommand),
so any frontend can apply them and they stay testable without a browser.

Command semantics:

  right_right  expand the cursor and move to its first child (the left
               child when both exist); no-op on a leaf.
  left_left    collapse the cursor and its siblings, then move to the
               parent; no-op at the root.
  up           move to the prior sibling; if none, to the previous node at
               the same level (across parents); if none, no-op.
  down         move to the next sibling; if none, to the next node at the
               same level; if none, no-op.

Level-order moves consider every node at the depth, not only visible ones;
landing under a collapsed parent expands that ancestor chain so the cursor
is always revealed. Note the sibling-collapse on left_left is deliberate and
differs from the more common collapse-self-then-move-up tree-widget
convention.
"""

from __future__ import annotations

import html
import json
from dataclasses import dataclass
from enum import Enum

from .errors import UnknownNode, UnsupportedStructure
from .ir_core import ArborArray, ArborBinaryTree, ArborIr


class NavCommand(str, Enum):
    RIGHT_RIGHT = "right_right"
    LEFT_LEFT = "left_left"
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class NavState:
    """Cursor plus the set of expanded internal nodes. Immutable snapshot."""

    cursor: str
    expanded: frozenset[str]


@dataclass(frozen=True)
class NavigableDoc:
    html: str
    nav_model: str


class _TreeIndex:
    """Relationship lookups the state machine needs, built once per call."""

    def __init__(self, ir: ArborBinaryTree):
        self.parent: dict[str, str | None] = {n.id: None for n in ir.nodes}
        self.left: dict[str, str | None] = {n.id: None for n in ir.nodes}
        self.right: dict[str, str | None] = {n.id: None for n in ir.nodes}
        self.depth: dict[str, int] = {n.id: n.depth for n in ir.nodes}
        self.is_leaf: dict[str, bool] = {n.id: n.is_leaf for n in ir.nodes}
        for e in ir.edges:
            self.parent[e.child] = e.parent
            if e.position == "left":
                self.left[e.parent] = e.child
            else:
                self.right[e.parent] = e.child
        self.root = ir.root().id
        # Left-to-right order within each depth, via BFS over (left, right).
        self.level: dict[int, list[str]] = {}
        queue = [self.root]
        while queue:
            node_id = queue.pop(0)
            self.level.setdefault(self.depth[node_id], []).append(node_id)
            for child in (self.left[node_id], self.right[node_id]):
                if child is not None:
                    queue.append(child)

    def children(self, node_id: str) -> list[str]:
        return [c for c in (self.left[node_id], self.right[node_id]) if c is not None]

    def ancestors(self, node_id: str) -> list[str]:
        out = []
        current = self.parent[node_id]
        while current is not None:
            out.append(current)
            current = self.parent[current]
        return out

    def sibling(self, node_id: str, offset: int) -> str | None:
        parent = self.parent[node_id]
        if parent is None:
            return None
        sibs = self.children(parent)
        i = sibs.index(node_id) + offset
        return sibs[i] if 0 <= i < len(sibs) else None

    def level_neighbor(self, node_id: str, offset: int) -> str | None:
        row = self.level[self.depth[node_id]]
        i = row.index(node_id) + offset
        return row[i] if 0 <= i < len(row) else None


def initial_nav_state(ir: ArborBinaryTree) -> NavState:
    """Cursor on the root, root expanded (unless it is itself a leaf)."""

    root = ir.root()
    expanded = frozenset() if root.is_leaf else frozenset({root.id})
    return NavState(cursor=root.id, expanded=expanded)


def nav_step(ir: ArborBinaryTree, state: NavState, cmd: NavCommand) -> NavState:
    """Apply one keyboard command; unreachable moves return the state unchanged."""

    index = _TreeIndex(ir)
    if state.cursor not in index.parent:
        raise UnknownNode(f"cursor {state.cursor!r} is not a node of this tree")
    cmd = NavCommand(cmd)
    cursor = state.cursor

    if cmd is NavCommand.RIGHT_RIGHT:
        kids = index.children(cursor)
        if not kids:
            return state
        return NavState(cursor=kids[0], expanded=state.expanded | {cursor})

    if cmd is NavCommand.LEFT_LEFT:
        parent = index.parent[cursor]
        if parent is None:
            return state
        generation = set(index.children(parent))
        return NavState(cursor=parent, expanded=frozenset(state.expanded - generation))

    offset = -1 if cmd is NavCommand.UP else 1
    target = index.sibling(cursor, offset)
    if target is None:
        target = index.level_neighbor(cursor, offset)
    if target is None:
        return state
    return NavState(cursor=target, expanded=state.expanded | set(index.ancestors(target)))


# ---------------------------------------------------------------------------
# HTML emission
# ---------------------------------------------------------------------------


def _nav_model_tree(ir: ArborBinaryTree) -> str:
    index = _TreeIndex(ir)
    nodes = [
        {
            "id": n.id,
            "value": n.value,
            "depth": n.depth,
            "position": n.position,
            "parent": index.parent[n.id],
            "left": index.left[n.id],
            "right": index.right[n.id],
        }
        for n in ir.nodes
    ]
    return json.dumps({"nodes": nodes, "initial_cursor": index.root}, separators=(",", ":"))


def _nav_model_array(ir: ArborArray) -> str:
    items = [{"id": e.id, "index": e.index, "value": e.value} for e in ir.elements]
    return json.dumps({"items": items}, separators=(",", ":"))


def _tree_item_html(ir: ArborBinaryTree, index: _TreeIndex, node_id: str, state: NavState, indent: str) -> list[str]:
    node = ir.node(node_id)
    name = f"{node.value}, root" if node.position == "root" else f"{node.value}, {node.position} child"
    parent = index.parent[node_id]
    sibs = index.children(parent) if parent is not None else [node_id]
    attrs = [
        'role="treeitem"',
        f'id="arbor-item-{html.escape(node_id, quote=True)}"',
        f'aria-label="{html.escape(name, quote=True)}"',
        f'aria-level="{node.depth + 1}"',
        f'aria-setsize="{len(sibs)}"',
        f'aria-posinset="{sibs.index(node_id) + 1}"',
    ]
    if not node.is_leaf:
        expanded = "true" if node_id in state.expanded else "false"
        attrs.append(f'aria-expanded="{expanded}"')
    attrs.append(f'tabindex="{0 if node_id == state.cursor else -1}"')
    lines = [f"{indent}<li {' '.join(attrs)}>"]
    lines.append(f'{indent}  <span class="arbor-node-label">{html.escape(node.value)}</span>')
    kids = index.children(node_id)
    if kids:
        # collapsed subtrees are hidden so the static fragment is consistent
        # even before any script binds the keyboard handling
        group_attrs = 'role="group"' if node_id in state.expanded else 'role="group" hidden'
        lines.append(f"{indent}  <ul {group_attrs}>")
        for child in kids:
            lines.extend(_tree_item_html(ir, index, child, state, indent + "    "))
        lines.append(f"{indent}  </ul>")
    lines.append(f"{indent}</li>")
    return lines


def emit_navigable(ir: ArborIr) -> NavigableDoc:
    """Render a validated array or binary tree IR as navigable HTML."""

    if isinstance(ir, ArborBinaryTree):
        model = _nav_model_tree(ir)
        index = _TreeIndex(ir)
        state = initial_nav_state(ir)
        label = ir.meta.title if ir.meta.title else "Binary tree"
        lines = [
            f'<div class="arbor-navigable" data-structure="binary_tree" '
            f"data-nav-model=\"{html.escape(model, quote=True)}\">",
            f'  <ul role="tree" aria-label="{html.escape(label, quote=True)}">',
        ]
        lines.extend(_tree_item_html(ir, index, index.root, state, "    "))
        lines.append("  </ul>")
        lines.append("</div>")
        return NavigableDoc(html="\n".join(lines), nav_model=model)

    if isinstance(ir, ArborArray):
        model = _nav_model_array(ir)
        label = ir.meta.title if ir.meta.title else "Array"
        lines = [
            f'<div class="arbor-navigable" data-structure="array" '
            f"data-nav-model=\"{html.escape(model, quote=True)}\">",
            f'  <ul role="list" aria-label="{html.escape(label, quote=True)}">',
        ]
        for e in ir.elements:
            name = f"Index {e.index}, value {e.value}"
            lines.append(
                f'    <li role="listitem" id="arbor-item-{html.escape(e.id, quote=True)}" '
                f'aria-label="{html.escape(name, quote=True)}" tabindex="{0 if e.index == 0 else -1}">'
                f"{html.escape(e.value)}</li>"
            )
        lines.append("  </ul>")
        lines.append("</div>")
        return NavigableDoc(html="\n".join(lines), nav_model=model)

    raise UnsupportedStructure(
        f"no navigable emitter for {ir.meta.type!r} (supported: array, binary_tree)"
    )
