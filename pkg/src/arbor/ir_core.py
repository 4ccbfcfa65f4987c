"""The validated intermediate representation and everything that runs on it.

One IR per structure type: ArborBinaryTree, ArborArray, ArborLinkedList,
Arbor2DArray. The two compilers (compile_tree, compile_array) turn a
DiagramAst into IR and never emit an invalid value; validate_ir re-checks
every invariant for IR arriving from JSON; the analysis queries answer the
structural questions the outputs are meant to support; to_json/from_json
define the canonical interchange form (documented in docs/ir-schema.md).

IR values are frozen dataclasses: immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import (
    ArityExceeded,
    EmptyDiagram,
    EmptyTree,
    IrViolation,
    JsonSyntaxError,
    NonNumericValue,
    NotAChain,
    NotATree,
    PositionConflict,
    SchemaViolation,
    UnknownNode,
)
from .spec_parser import DiagramAst

_INT_RE = re.compile(r"^-?\d+$")


@dataclass(frozen=True)
class Meta:
    type: str
    title: str | None = None
    description: str | None = None


@dataclass(frozen=True)
class TreeNode:
    id: str
    value: str
    depth: int
    position: str  # root | left | right
    is_leaf: bool


@dataclass(frozen=True)
class TreeEdge:
    parent: str
    child: str
    position: str  # left | right


@dataclass(frozen=True)
class ArborBinaryTree:
    meta: Meta
    nodes: tuple[TreeNode, ...]
    edges: tuple[TreeEdge, ...]

    def node(self, node_id: str) -> TreeNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise UnknownNode(f"no node with id {node_id!r}")

    def root(self) -> TreeNode:
        for n in self.nodes:
            if n.position == "root":
                return n
        raise EmptyTree("tree has no root node")

    def children(self, node_id: str) -> dict[str, str]:
        """Maps 'left'/'right' to child ids for the given parent."""

        return {e.position: e.child for e in self.edges if e.parent == node_id}

    def parent_of(self, node_id: str) -> str | None:
        for e in self.edges:
            if e.child == node_id:
                return e.parent
        return None


@dataclass(frozen=True)
class ArrayElement:
    id: str
    value: str
    index: int


@dataclass(frozen=True)
class ArborArray:
    meta: Meta
    elements: tuple[ArrayElement, ...]


@dataclass(frozen=True)
class ListNode:
    id: str
    value: str


@dataclass(frozen=True)
class ArborLinkedList:
    meta: Meta
    nodes: tuple[ListNode, ...]


@dataclass(frozen=True)
class GridRow:
    children: tuple[ListNode, ...]


@dataclass(frozen=True)
class Arbor2DArray:
    meta: Meta
    rows: tuple[GridRow, ...]


ArborIr = ArborBinaryTree | ArborArray | ArborLinkedList | Arbor2DArray


@dataclass(frozen=True)
class SearchTraceStep:
    node_id: str
    value: str
    decision: str  # go_left | go_right | found | dead_end


@dataclass(frozen=True)
class Violation:
    """One broken IR invariant, as data rather than an exception."""

    invariant: str
    element_ids: tuple[str, ...]
    message: str


# ---------------------------------------------------------------------------
# Compilers
# ---------------------------------------------------------------------------

_SIDE_BY_LABEL = {"L": "left", "l": "left", "R": "right", "r": "right"}


def compile_tree(
    ast: DiagramAst,
    *,
    title: str | None = None,
    description: str | None = None,
) -> ArborBinaryTree:
    """Compile an AST whose edges form a rooted binary tree.

    Child sides come from explicit L/R edge labels when present; otherwise a
    child takes the first free slot in declaration order, left before right.
    """

    if not ast.nodes:
        raise EmptyDiagram("diagram declares no nodes")

    ids = [n.id for n in ast.nodes]
    labels = {n.id: n.label for n in ast.nodes}
    children: dict[str, list[tuple[str, str | None]]] = {i: [] for i in ids}
    parents: dict[str, list[str]] = {i: [] for i in ids}
    for e in ast.edges:
        children[e.src].append((e.dst, e.edge_label))
        parents[e.dst].append(e.src)

    for node_id, ps in parents.items():
        if len(ps) > 1:
            raise NotATree(f"node {node_id!r} has multiple parents: {', '.join(sorted(set(ps)))}")
    for node_id, cs in children.items():
        if len(cs) > 2:
            raise ArityExceeded(
                f"node {node_id!r} has {len(cs)} children; a binary tree allows at most 2",
                node_id=node_id,
            )

    roots = [i for i in ids if not parents[i]]
    if not roots:
        raise NotATree("no root node: every node has a parent (the edges form a cycle)")
    if len(roots) > 1:
        raise NotATree(f"multiple roots: {', '.join(roots)}")
    root = roots[0]

    # Side assignment: single pass in declaration order per parent.
    slot_of: dict[str, str] = {}
    for parent_id in ids:
        taken: dict[str, str] = {}
        for child_id, edge_label in children[parent_id]:
            if edge_label is not None:
                side = _SIDE_BY_LABEL.get(edge_label.strip())
                if side is None:
                    raise PositionConflict(
                        f"edge {parent_id!r}->{child_id!r} label {edge_label!r} does not name a side"
                        " (expected L or R)"
                    )
                if side in taken:
                    raise PositionConflict(
                        f"node {parent_id!r} already has a {side} child ({taken[side]!r});"
                        f" cannot place {child_id!r} there"
                    )
            else:
                side = "left" if "left" not in taken else "right"
                if side in taken:
                    raise PositionConflict(
                        f"node {parent_id!r} already has a {side} child ({taken[side]!r});"
                        f" cannot place {child_id!r} there"
                    )
            taken[side] = child_id
            slot_of[child_id] = side

    # Reachability from the root covers both cycles and disconnected parts.
    depth = {root: 0}
    queue = [root]
    while queue:
        current = queue.pop(0)
        for child_id, _ in children[current]:
            if child_id not in depth:
                depth[child_id] = depth[current] + 1
                queue.append(child_id)
    if len(depth) != len(ids):
        missing = [i for i in ids if i not in depth]
        raise NotATree(
            f"nodes unreachable from root {root!r} (disconnected or cyclic): {', '.join(missing)}"
        )

    nodes = tuple(
        TreeNode(
            id=i,
            value=labels[i],
            depth=depth[i],
            position="root" if i == root else slot_of[i],
            is_leaf=not children[i],
        )
        for i in ids
    )
    edges = tuple(TreeEdge(parent=e.src, child=e.dst, position=slot_of[e.dst]) for e in ast.edges)
    return ArborBinaryTree(meta=Meta("binary_tree", title, description), nodes=nodes, edges=edges)


def compile_array(
    ast: DiagramAst,
    *,
    title: str | None = None,
    description: str | None = None,
) -> ArborArray:
    """Compile an AST that is a simple chain (or one isolated node).

    Element order is chain order starting at the unique head; index is the
    position along the chain.
    """

    if not ast.nodes:
        raise EmptyDiagram("diagram declares no nodes")

    ids = [n.id for n in ast.nodes]
    labels = {n.id: n.label for n in ast.nodes}
    next_of: dict[str, str] = {}
    incoming: dict[str, int] = {i: 0 for i in ids}
    for e in ast.edges:
        if e.src in next_of:
            raise NotAChain(f"node {e.src!r} links to more than one successor (branching)")
        next_of[e.src] = e.dst
        incoming[e.dst] += 1
        if incoming[e.dst] > 1:
            raise NotAChain(f"node {e.dst!r} has more than one predecessor (branching)")

    heads = [i for i in ids if incoming[i] == 0]
    if not heads:
        raise NotAChain("chain has no head element (the links form a cycle)")
    if len(heads) > 1:
        raise NotAChain(f"chain has multiple heads (disconnected): {', '.join(heads)}")

    order = []
    seen = set()
    current: str | None = heads[0]
    while current is not None:
        if current in seen:
            raise NotAChain(f"chain revisits node {current!r} (cycle)")
        seen.add(current)
        order.append(current)
        current = next_of.get(current)
    if len(order) != len(ids):
        missing = [i for i in ids if i not in seen]
        raise NotAChain(f"elements not linked into the chain: {', '.join(missing)}")

    elements = tuple(
        ArrayElement(id=i, value=labels[i], index=idx) for idx, i in enumerate(order)
    )
    return ArborArray(meta=Meta("array", title, description), elements=elements)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _check_ids_unique(ids: list[str], out: list[Violation]) -> None:
    seen: set[str] = set()
    dupes: list[str] = []
    for i in ids:
        if i in seen and i not in dupes:
            dupes.append(i)
        seen.add(i)
    if dupes:
        out.append(Violation("DuplicateId", tuple(dupes), f"duplicate ids: {', '.join(dupes)}"))


def _validate_tree(ir: ArborBinaryTree) -> list[Violation]:
    out: list[Violation] = []
    if not ir.nodes:
        out.append(Violation("EmptyStructure", (), "tree has no nodes"))
        return out

    ids = [n.id for n in ir.nodes]
    _check_ids_unique(ids, out)
    id_set = set(ids)

    structural_ok = True
    parent_of: dict[str, str] = {}
    children: dict[str, dict[str, str]] = {i: {} for i in id_set}
    slots_seen: set[tuple[str, str]] = set()
    for e in ir.edges:
        if e.parent not in id_set or e.child not in id_set:
            out.append(
                Violation(
                    "UnknownEndpoint",
                    (e.parent, e.child),
                    f"edge {e.parent!r}->{e.child!r} references an undeclared node",
                )
            )
            structural_ok = False
            continue
        if e.parent == e.child:
            out.append(Violation("SelfLoop", (e.parent,), f"edge {e.parent!r}->{e.child!r} is a self-loop"))
            structural_ok = False
            continue
        if e.position not in ("left", "right"):
            out.append(
                Violation(
                    "InvalidPosition",
                    (e.parent, e.child),
                    f"edge {e.parent!r}->{e.child!r} has position {e.position!r}",
                )
            )
            structural_ok = False
        if (e.parent, e.position) in slots_seen:
            out.append(
                Violation(
                    "DuplicateChildPosition",
                    (e.parent, e.child),
                    f"node {e.parent!r} has two {e.position} children",
                )
            )
            structural_ok = False
        slots_seen.add((e.parent, e.position))
        if e.child in parent_of:
            out.append(
                Violation(
                    "MultipleParents",
                    (e.child,),
                    f"node {e.child!r} has parents {parent_of[e.child]!r} and {e.parent!r}",
                )
            )
            structural_ok = False
        else:
            parent_of[e.child] = e.parent
        children[e.parent][e.position] = e.child

    # Cycle detection by following parent links.
    cycle_members: list[str] = []
    for start in ids:
        seen_here: list[str] = []
        current: str | None = start
        while current is not None and current not in seen_here:
            seen_here.append(current)
            current = parent_of.get(current)
        if current is not None and current not in cycle_members:
            # walked back onto the path: everything from `current` on is the cycle
            cycle_members.extend(seen_here[seen_here.index(current):])
    if cycle_members:
        out.append(
            Violation(
                "Cycle",
                tuple(sorted(set(cycle_members))),
                f"parent links form a cycle: {', '.join(sorted(set(cycle_members)))}",
            )
        )
        structural_ok = False

    roots = [i for i in ids if i not in parent_of]
    if not roots and not cycle_members:
        out.append(Violation("Cycle", tuple(ids), "every node has a parent"))
        structural_ok = False
    if len(roots) > 1:
        out.append(Violation("MultipleRoots", tuple(roots), f"multiple roots: {', '.join(roots)}"))
        structural_ok = False

    if structural_ok and len(roots) == 1:
        root = roots[0]
        reached = {root: 0}
        queue = [root]
        while queue:
            current = queue.pop(0)
            for child in children[current].values():
                if child not in reached:
                    reached[child] = reached[current] + 1
                    queue.append(child)
        unreached = [i for i in ids if i not in reached]
        if unreached:
            out.append(
                Violation(
                    "Disconnected",
                    tuple(unreached),
                    f"nodes unreachable from the root: {', '.join(unreached)}",
                )
            )
        else:
            # Structure is a genuine tree: check the derived per-node fields.
            for n in ir.nodes:
                if n.depth != reached[n.id]:
                    out.append(
                        Violation(
                            "DepthMismatch",
                            (n.id,),
                            f"node {n.id!r} stores depth {n.depth}, expected {reached[n.id]}",
                        )
                    )
                expected_pos = "root" if n.id == root else next(
                    pos for pos, c in children[parent_of[n.id]].items() if c == n.id
                )
                if n.position != expected_pos:
                    out.append(
                        Violation(
                            "PositionMismatch",
                            (n.id,),
                            f"node {n.id!r} stores position {n.position!r}, expected {expected_pos!r}",
                        )
                    )
                expected_leaf = not children[n.id]
                if n.is_leaf != expected_leaf:
                    out.append(
                        Violation(
                            "LeafFlagMismatch",
                            (n.id,),
                            f"node {n.id!r} stores is_leaf={n.is_leaf}, expected {expected_leaf}",
                        )
                    )
    return out


def _validate_array(ir: ArborArray) -> list[Violation]:
    out: list[Violation] = []
    if not ir.elements:
        out.append(Violation("EmptyStructure", (), "array has no elements"))
        return out
    _check_ids_unique([e.id for e in ir.elements], out)
    for expected, e in enumerate(ir.elements):
        if e.index != expected:
            out.append(
                Violation(
                    "IndexMismatch",
                    (e.id,),
                    f"element {e.id!r} stores index {e.index}, expected {expected}",
                )
            )
    return out


def _validate_linked_list(ir: ArborLinkedList) -> list[Violation]:
    out: list[Violation] = []
    if not ir.nodes:
        out.append(Violation("EmptyStructure", (), "linked list has no nodes"))
        return out
    _check_ids_unique([n.id for n in ir.nodes], out)
    return out


def _validate_grid(ir: Arbor2DArray) -> list[Violation]:
    out: list[Violation] = []
    total = sum(len(r.children) for r in ir.rows)
    if not ir.rows or total == 0:
        out.append(Violation("EmptyStructure", (), "2D array has no elements"))
        return out
    widths = {len(r.children) for r in ir.rows}
    if len(widths) > 1:
        out.append(
            Violation(
                "RaggedRows",
                (),
                f"rows have unequal lengths: {sorted(widths)}",
            )
        )
    _check_ids_unique([c.id for r in ir.rows for c in r.children], out)
    return out


def validate_ir(ir: ArborIr) -> list[Violation]:
    """Check every invariant of the IR variant; violations are data, not errors."""

    if isinstance(ir, ArborBinaryTree):
        return _validate_tree(ir)
    if isinstance(ir, ArborArray):
        return _validate_array(ir)
    if isinstance(ir, ArborLinkedList):
        return _validate_linked_list(ir)
    if isinstance(ir, Arbor2DArray):
        return _validate_grid(ir)
    raise TypeError(f"not an IR value: {type(ir).__name__}")


# ---------------------------------------------------------------------------
# Description
# ---------------------------------------------------------------------------


def describe(ir: ArborIr) -> str:
    """Author description verbatim when present, otherwise a templated summary."""

    if ir.meta.description:
        return ir.meta.description
    if isinstance(ir, ArborBinaryTree):
        return (
            f"This binary tree contains {len(ir.nodes)} nodes and {len(ir.edges)} edges. "
            f"The root node is {ir.root().value}."
        )
    if isinstance(ir, ArborArray):
        return f"This array contains {len(ir.elements)} elements."
    if isinstance(ir, ArborLinkedList):
        return f"This linked list contains {len(ir.nodes)} nodes."
    if isinstance(ir, Arbor2DArray):
        cols = len(ir.rows[0].children) if ir.rows else 0
        return f"This 2D array contains {len(ir.rows)} rows and {cols} columns."
    raise TypeError(f"not an IR value: {type(ir).__name__}")


# ---------------------------------------------------------------------------
# Analysis queries
# ---------------------------------------------------------------------------


def _int_value(raw: str, element_id: str) -> int:
    if not _INT_RE.match(raw.strip()):
        raise NonNumericValue(
            f"value {raw!r} of {element_id!r} is not an integer",
            element_id=element_id,
        )
    return int(raw.strip())


def find_value(ir: ArborArray, value: str) -> int | None:
    """Index of the first element whose value equals the query, else None."""

    for e in ir.elements:
        if e.value == value:
            return e.index
    return None


def is_sorted_increasing(ir: ArborArray) -> bool:
    """True iff integer values are non-decreasing in index order."""

    values = [_int_value(e.value, e.id) for e in ir.elements]
    return all(a <= b for a, b in zip(values, values[1:]))


def child_of(ir: ArborBinaryTree, node_id: str, side: str) -> TreeNode | None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    ir.node(node_id)  # raises UnknownNode
    child_id = ir.children(node_id).get(side)
    return ir.node(child_id) if child_id is not None else None


def leaves(ir: ArborBinaryTree) -> list[TreeNode]:
    """All leaf nodes, left to right (in-order)."""

    out: list[TreeNode] = []

    def walk(node_id: str) -> None:
        kids = ir.children(node_id)
        if "left" in kids:
            walk(kids["left"])
        node = ir.node(node_id)
        if node.is_leaf:
            out.append(node)
        if "right" in kids:
            walk(kids["right"])

    if ir.nodes:
        walk(ir.root().id)
    return out


def check_bst(ir: ArborBinaryTree) -> dict:
    """Full binary-search-tree check with ancestor-induced bounds.

    Every node's value must lie strictly inside the (lower, upper) interval
    accumulated along its root path — not merely compare against its parent.
    Returns {"holds": bool, "violations": [{"node_id", "bound_violated"}]}.
    """

    violations: list[dict] = []

    def walk(node_id: str, lower: int | None, upper: int | None) -> None:
        node = ir.node(node_id)
        value = _int_value(node.value, node_id)
        if lower is not None and value <= lower:
            violations.append({"node_id": node_id, "bound_violated": "lower"})
        elif upper is not None and value >= upper:
            violations.append({"node_id": node_id, "bound_violated": "upper"})
        kids = ir.children(node_id)
        if "left" in kids:
            walk(kids["left"], lower, value if upper is None else min(upper, value))
        if "right" in kids:
            walk(kids["right"], value if lower is None else max(lower, value), upper)

    if ir.nodes:
        walk(ir.root().id, None, None)
    return {"holds": not violations, "violations": violations}


def binary_search_trace(ir: ArborBinaryTree, target: int) -> list[SearchTraceStep]:
    """The comparison path a binary search takes for ``target``.

    The tree need not actually satisfy the BST property; the trace follows
    the comparison rules regardless.
    """

    if not ir.nodes:
        raise EmptyTree("cannot search an empty tree")
    steps: list[SearchTraceStep] = []
    current: str | None = ir.root().id
    while current is not None:
        node = ir.node(current)
        value = _int_value(node.value, current)
        kids = ir.children(current)
        if target == value:
            steps.append(SearchTraceStep(current, node.value, "found"))
            return steps
        side = "left" if target < value else "right"
        if side in kids:
            steps.append(SearchTraceStep(current, node.value, f"go_{side}"))
            current = kids[side]
        else:
            steps.append(SearchTraceStep(current, node.value, "dead_end"))
            current = None
    return steps


# ---------------------------------------------------------------------------
# Canonical JSON
# ---------------------------------------------------------------------------


def _meta_to_dict(meta: Meta) -> dict:
    out: dict = {"type": meta.type}
    if meta.title is not None:
        out["title"] = meta.title
    if meta.description is not None:
        out["description"] = meta.description
    return out


def _ir_to_dict(ir: ArborIr) -> dict:
    if isinstance(ir, ArborBinaryTree):
        return {
            "meta": _meta_to_dict(ir.meta),
            "nodes": [
                {
                    "id": n.id,
                    "value": n.value,
                    "depth": n.depth,
                    "position": n.position,
                    "is_leaf": n.is_leaf,
                }
                for n in ir.nodes
            ],
            "edges": [
                {"parent": e.parent, "child": e.child, "position": e.position} for e in ir.edges
            ],
        }
    if isinstance(ir, ArborArray):
        return {
            "meta": _meta_to_dict(ir.meta),
            "elements": [{"id": e.id, "value": e.value, "index": e.index} for e in ir.elements],
        }
    if isinstance(ir, ArborLinkedList):
        return {
            "meta": _meta_to_dict(ir.meta),
            "nodes": [{"id": n.id, "value": n.value} for n in ir.nodes],
        }
    if isinstance(ir, Arbor2DArray):
        return {
            "meta": _meta_to_dict(ir.meta),
            "rows": [
                {"children": [{"id": c.id, "value": c.value} for c in r.children]} for r in ir.rows
            ],
        }
    raise TypeError(f"not an IR value: {type(ir).__name__}")


def to_json(ir: ArborIr) -> str:
    """Serialize to the canonical JSON form: fixed key order, 2-space indent."""

    violations = validate_ir(ir)
    if violations:
        raise IrViolation(
            "cannot serialize an invalid IR: " + "; ".join(v.message for v in violations),
            violations=violations,
        )
    return json.dumps(_ir_to_dict(ir), indent=2, ensure_ascii=False)


class _Reader:
    """Strict field extraction: wrong types or unknown keys are schema errors."""

    def __init__(self, obj, where: str):
        if not isinstance(obj, dict):
            raise SchemaViolation(f"{where} must be a JSON object, not {type(obj).__name__}")
        self.obj = obj
        self.where = where
        self.read: set[str] = set()

    def get(self, key: str, kind: type, *, optional: bool = False):
        self.read.add(key)
        if key not in self.obj:
            if optional:
                return None
            raise SchemaViolation(f"{self.where} is missing required field {key!r}")
        value = self.obj[key]
        if kind is int and isinstance(value, bool):  # bool is an int subclass
            raise SchemaViolation(f"{self.where}.{key} must be an integer")
        if not isinstance(value, kind):
            raise SchemaViolation(f"{self.where}.{key} must be {kind.__name__}")
        return value

    def finish(self) -> None:
        unknown = set(self.obj) - self.read
        if unknown:
            raise SchemaViolation(f"{self.where} has unknown fields: {', '.join(sorted(unknown))}")


def _meta_from(obj) -> Meta:
    r = _Reader(obj, "meta")
    meta_type = r.get("type", str)
    title = r.get("title", str, optional=True)
    description = r.get("description", str, optional=True)
    r.finish()
    if meta_type not in ("binary_tree", "array", "linked_list", "2d_array"):
        raise SchemaViolation(f"meta.type {meta_type!r} is not a known structure type")
    return Meta(meta_type, title, description)


def from_json(text: str) -> ArborIr:
    """Parse canonical IR JSON, rejecting schema and invariant violations."""

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JsonSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    top = _Reader(obj, "IR")
    meta = _meta_from(top.get("meta", dict))

    if meta.type == "binary_tree":
        nodes = []
        for i, raw in enumerate(top.get("nodes", list)):
            r = _Reader(raw, f"nodes[{i}]")
            nodes.append(
                TreeNode(
                    id=r.get("id", str),
                    value=r.get("value", str),
                    depth=r.get("depth", int),
                    position=r.get("position", str),
                    is_leaf=r.get("is_leaf", bool),
                )
            )
            r.finish()
        edges = []
        for i, raw in enumerate(top.get("edges", list)):
            r = _Reader(raw, f"edges[{i}]")
            edges.append(
                TreeEdge(
                    parent=r.get("parent", str),
                    child=r.get("child", str),
                    position=r.get("position", str),
                )
            )
            r.finish()
        ir: ArborIr = ArborBinaryTree(meta, tuple(nodes), tuple(edges))
    elif meta.type == "array":
        elements = []
        for i, raw in enumerate(top.get("elements", list)):
            r = _Reader(raw, f"elements[{i}]")
            elements.append(
                ArrayElement(id=r.get("id", str), value=r.get("value", str), index=r.get("index", int))
            )
            r.finish()
        ir = ArborArray(meta, tuple(elements))
    elif meta.type == "linked_list":
        nodes = []
        for i, raw in enumerate(top.get("nodes", list)):
            r = _Reader(raw, f"nodes[{i}]")
            nodes.append(ListNode(id=r.get("id", str), value=r.get("value", str)))
            r.finish()
        ir = ArborLinkedList(meta, tuple(nodes))
    else:  # 2d_array
        rows = []
        for i, raw in enumerate(top.get("rows", list)):
            r = _Reader(raw, f"rows[{i}]")
            cells = []
            for j, cell in enumerate(r.get("children", list)):
                cr = _Reader(cell, f"rows[{i}].children[{j}]")
                cells.append(ListNode(id=cr.get("id", str), value=cr.get("value", str)))
                cr.finish()
            rows.append(GridRow(tuple(cells)))
            r.finish()
        ir = Arbor2DArray(meta, tuple(rows))
    top.finish()

    violations = validate_ir(ir)
    if violations:
        raise IrViolation(
            "IR violates invariants: " + "; ".join(v.message for v in violations),
            violations=violations,
        )
    return ir
