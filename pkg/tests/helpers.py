"""Shared fixtures-in-code: reference sources, random generators, oracles.

The oracle functions here derive expectations straight from independently
tracked parent/side assignments, never from the code under test.
"""

from __future__ import annotations

import random

from arbor import SourceSpec, compile_array, compile_tree, parse

# The six-node demo tree used throughout: root 3; left child 1 with children
# 0 and 2; right child 6 with a single (left) child 4.
DEMO_TREE_MERMAID = (
    "flowchart TD; A((3)); A -->B((1)); B --> C((0)); B --> D((2)); A -->E((6)); E --> F((4))"
)

# The same tree written in both languages: used for cross-language checks.
PAIR_TREE_MERMAID = """flowchart TD
A((1))
    A -->B((2))
        B --> C((3))
        B --> D((4))
    A -->E((5))
        E --> F((6))
"""

PAIR_TREE_DOT = """digraph bt {
    A[label="1"];
    B[label="2"];
    C[label="3"];
    D[label="4"];
    E[label="5"];
    F[label="6"];

    A->B;
        B->C;
        B->D;
    A->E;
        E->F;
}
"""

THREE_ELEMENT_ARRAY_MERMAID = "flowchart LR\nA[37] --- B[2] --- C[5]\n"


def tree_ir(source: str, language: str = "mermaid", **meta):
    ast = parse(SourceSpec(source, language, "binary_tree"))
    return compile_tree(ast, **meta)


def array_ir(source: str, **meta):
    ast = parse(SourceSpec(source, "mermaid", "array"))
    return compile_array(ast, **meta)


def demo_tree():
    return tree_ir(DEMO_TREE_MERMAID)


class RandomTree:
    """A random binary tree with independently tracked structure.

    ``parent`` maps node id to (parent id, side); the root maps to None.
    ``value`` maps node id to its label. ``source`` is Mermaid text whose
    edges carry explicit |L|/|R| labels, so the expected sides never depend
    on the compiler's declaration-order rule.
    """

    def __init__(self, rng: random.Random, max_nodes: int = 15, min_nodes: int = 1):
        n = rng.randint(min_nodes, max_nodes)
        ids = [f"n{i}" for i in range(n)]
        self.value = {i: str(rng.randint(0, 99)) for i in ids}
        self.parent: dict[str, tuple[str, str] | None] = {ids[0]: None}
        open_slots: list[tuple[str, str]] = [(ids[0], "left"), (ids[0], "right")]
        edges = []
        for node_id in ids[1:]:
            slot = open_slots.pop(rng.randrange(len(open_slots)))
            parent_id, side = slot
            self.parent[node_id] = (parent_id, side)
            edges.append((parent_id, node_id, side))
            open_slots.append((node_id, "left"))
            open_slots.append((node_id, "right"))
        self.ids = ids
        lines = ["flowchart TD"]
        for i in ids:
            lines.append(f"{i}(({self.value[i]}))")
        for parent_id, child_id, side in edges:
            lines.append(f"{parent_id} -->|{side[0].upper()}| {child_id}")
        self.source = "\n".join(lines) + "\n"

    # --- oracle views, computed from self.parent only ---

    def children(self, node_id: str) -> dict[str, str]:
        out = {}
        for child, link in self.parent.items():
            if link is not None and link[0] == node_id:
                out[link[1]] = child
        return out

    def depth(self, node_id: str) -> int:
        d = 0
        link = self.parent[node_id]
        while link is not None:
            d += 1
            link = self.parent[link[0]]
        return d

    def leaves_inorder(self) -> list[str]:
        out = []

        def walk(node_id: str):
            kids = self.children(node_id)
            if "left" in kids:
                walk(kids["left"])
            if not kids:
                out.append(node_id)
            if "right" in kids:
                walk(kids["right"])

        walk(self.root())
        return out

    def root(self) -> str:
        return next(i for i, link in self.parent.items() if link is None)

    def height(self) -> int:
        return max(self.depth(i) for i in self.ids)


def random_array_source(rng: random.Random, max_elements: int = 8) -> tuple[str, list[str]]:
    n = rng.randint(1, max_elements)
    values = [str(rng.randint(0, 99)) for _ in range(n)]
    chain = " --- ".join(f"e{i}[{v}]" for i, v in enumerate(values))
    return f"flowchart LR\n{chain}\n", values


def all_tree_shapes(n: int):
    """Every binary tree shape with n nodes, as nested (left, right) tuples."""

    if n == 0:
        yield None
        return
    for left_size in range(n):
        for left in all_tree_shapes(left_size):
            for right in all_tree_shapes(n - 1 - left_size):
                yield (left, right)


def shape_to_source(shape, values: list[str]) -> str:
    """Mermaid source for a shape, assigning values in preorder."""

    lines = ["flowchart TD"]
    counter = [0]

    def walk(node) -> str:
        node_id = f"s{counter[0]}"
        lines.append(f"{node_id}(({values[counter[0]]}))")
        counter[0] += 1
        left, right = node
        if left is not None:
            child = walk(left)
            lines.append(f"{node_id} -->|L| {child}")
        if right is not None:
            child = walk(right)
            lines.append(f"{node_id} -->|R| {child}")
        return node_id

    walk(shape)
    return "\n".join(lines) + "\n"


def bst_oracle(ir) -> bool:
    """All-descendant brute force: every node beats its whole left subtree
    and loses to its whole right subtree, strictly."""

    def subtree_values(node_id: str) -> list[int]:
        kids = ir.children(node_id)
        out = [int(ir.node(node_id).value)]
        for child in kids.values():
            out.extend(subtree_values(child))
        return out

    def ok(node_id: str) -> bool:
        kids = ir.children(node_id)
        v = int(ir.node(node_id).value)
        if "left" in kids and any(x >= v for x in subtree_values(kids["left"])):
            return False
        if "right" in kids and any(x <= v for x in subtree_values(kids["right"])):
            return False
        return all(ok(c) for c in kids.values())

    return ok(ir.root().id)
