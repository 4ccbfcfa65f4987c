import random

import pytest

from arbor import (
    binary_search_trace,
    check_bst,
    child_of,
    compile_tree,
    find_value,
    is_sorted_increasing,
    leaves,
    parse,
    SourceSpec,
)
from arbor.errors import EmptyTree, NonNumericValue, UnknownNode

from helpers import (
    PAIR_TREE_MERMAID,
    RandomTree,
    all_tree_shapes,
    array_ir,
    bst_oracle,
    demo_tree,
    shape_to_source,
    tree_ir,
)


class TestFindValue:
    def test_found(self):
        assert find_value(array_ir("flowchart LR\nA[37] --- B[2] --- C[5]"), "5") == 2

    def test_absent(self):
        assert find_value(array_ir("flowchart LR\nA[37] --- B[2] --- C[5]"), "54") is None

    def test_first_match_wins(self):
        assert find_value(array_ir("flowchart LR\nA[5] --- B[5]"), "5") == 0


class TestIsSorted:
    def test_unsorted(self):
        assert is_sorted_increasing(array_ir("flowchart LR\nA[37] --- B[2] --- C[5]")) is False

    def test_single_element(self):
        assert is_sorted_increasing(array_ir("flowchart LR\nA[1]")) is True

    def test_ties_allowed(self):
        assert is_sorted_increasing(array_ir("flowchart LR\nA[2] --- B[2] --- C[3]")) is True

    def test_non_numeric(self):
        with pytest.raises(NonNumericValue) as exc:
            is_sorted_increasing(array_ir("flowchart LR\nA[x] --- B[y]"))
        assert exc.value.element_id == "A"

    def test_negative_values(self):
        assert is_sorted_increasing(array_ir("flowchart LR\nA[-3] --- B[0] --- C[12]")) is True


class TestChildOf:
    def test_demo_root_right_child(self):
        ir = demo_tree()
        node = child_of(ir, ir.root().id, "right")
        assert node is not None and node.value == "6"

    def test_leaf_has_no_children(self):
        ir = tree_ir(PAIR_TREE_MERMAID)
        assert child_of(ir, "F", "left") is None
        assert child_of(ir, "F", "right") is None

    def test_unknown_node(self):
        with pytest.raises(UnknownNode):
            child_of(demo_tree(), "ZZ", "left")


class TestLeaves:
    def test_six_node_tree(self):
        result = leaves(tree_ir(PAIR_TREE_MERMAID))
        assert [(n.id, n.value) for n in result] == [("C", "3"), ("D", "4"), ("F", "6")]
        assert len(result) == 3

    def test_single_node(self):
        result = leaves(tree_ir("flowchart TD\nA((7))"))
        assert [n.value for n in result] == ["7"]

    def test_perfect_depth_two_tree(self):
        src = (
            "flowchart TD\nA((1))\nA --> B((2))\nA --> C((3))\n"
            "B --> D((4))\nB --> E((5))\nC --> F((6))\nC --> G((7))\n"
        )
        assert len(leaves(tree_ir(src))) == 4  # 2^depth

    def test_in_order_matches_oracle_on_random_trees(self):
        rng = random.Random(23)
        for _ in range(50):
            tree = RandomTree(rng)
            got = leaves(tree_ir(tree.source))
            assert [n.id for n in got] == tree.leaves_inorder()


class TestCheckBst:
    def test_six_node_tree_violates(self):
        # Root 1 with left child 2: bound-propagation oracle flags B.
        result = check_bst(tree_ir(PAIR_TREE_MERMAID))
        assert result["holds"] is False
        assert any(v["node_id"] == "B" for v in result["violations"])

    def test_textbook_bst_holds(self):
        src = (
            "flowchart TD\nA((4))\nA --> B((2))\nA --> C((6))\n"
            "B --> D((1))\nB --> E((3))\nC --> F((5))\nC --> G((7))\n"
        )
        assert check_bst(tree_ir(src)) == {"holds": True, "violations": []}

    def test_ancestor_bound_not_parent_local(self):
        # 5 with left child 3; 3's right child is 7: locally 7 > 3 looks
        # fine, but 7 must stay below the ancestor bound 5.
        src = "flowchart TD\nA((5))\nA -->|L| B((3))\nB -->|R| C((7))\n"
        result = check_bst(tree_ir(src))
        assert result["holds"] is False
        assert any(v["node_id"] == "C" and v["bound_violated"] == "upper" for v in result["violations"])

    def test_non_numeric(self):
        with pytest.raises(NonNumericValue):
            check_bst(tree_ir("flowchart TD\nA((x)) --> B((1))"))

    def test_matches_brute_force_on_exhaustive_small_shapes(self):
        rng = random.Random(29)
        cases = 0
        for n in range(1, 7):
            for shape in all_tree_shapes(n):
                for _ in range(4):
                    values = [str(rng.randint(1, 7)) for _ in range(n)]
                    ir = tree_ir(shape_to_source(shape, values))
                    assert check_bst(ir)["holds"] == bst_oracle(ir), (shape, values)
                    cases += 1
        assert cases >= 500


class TestBinarySearchTrace:
    def test_demo_target_5_dead_end(self):
        steps = binary_search_trace(demo_tree(), 5)
        assert [(s.value, s.decision) for s in steps] == [
            ("3", "go_right"), ("6", "go_left"), ("4", "dead_end"),
        ]

    def test_demo_target_3_found_at_root(self):
        steps = binary_search_trace(demo_tree(), 3)
        assert [(s.value, s.decision) for s in steps] == [("3", "found")]

    def test_demo_target_0_found(self):
        steps = binary_search_trace(demo_tree(), 0)
        assert [(s.value, s.decision) for s in steps] == [
            ("3", "go_left"), ("1", "go_left"), ("0", "found"),
        ]

    def test_terminal_step_is_last_and_unique(self):
        rng = random.Random(31)
        for _ in range(50):
            tree = RandomTree(rng)
            ir = tree_ir(tree.source)
            steps = binary_search_trace(ir, rng.randint(-5, 105))
            terminal = [s for s in steps if s.decision in ("found", "dead_end")]
            assert len(terminal) == 1
            assert steps[-1] is terminal[0]

    def test_trace_descends_and_is_bounded_by_height(self):
        rng = random.Random(37)
        for _ in range(100):
            tree = RandomTree(rng)
            ir = tree_ir(tree.source)
            steps = binary_search_trace(ir, rng.randint(0, 99))
            assert len(steps) <= tree.height() + 1
            depths = [ir.node(s.node_id).depth for s in steps]
            assert depths == sorted(depths)
            assert len(set(depths)) == len(depths)  # strictly descending

    def test_empty_tree(self):
        from arbor import ArborBinaryTree, Meta

        with pytest.raises(EmptyTree):
            binary_search_trace(ArborBinaryTree(Meta("binary_tree"), (), ()), 1)

    def test_non_numeric(self):
        with pytest.raises(NonNumericValue):
            binary_search_trace(tree_ir("flowchart TD\nA((x))"), 1)
