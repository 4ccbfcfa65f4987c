import json
import random

import pytest

from arbor import (
    ArborBinaryTree,
    Meta,
    SourceSpec,
    TreeEdge,
    TreeNode,
    compile_tree,
    from_json,
    parse,
    to_json,
)
from arbor.errors import IrViolation, JsonSyntaxError, SchemaViolation

from helpers import (
    PAIR_TREE_DOT,
    PAIR_TREE_MERMAID,
    RandomTree,
    array_ir,
    random_array_source,
    tree_ir,
)


def test_cross_language_json_is_byte_identical():
    from_mermaid = to_json(tree_ir(PAIR_TREE_MERMAID))
    from_dot = to_json(tree_ir(PAIR_TREE_DOT, language="dot"))
    assert from_mermaid == from_dot


def test_key_order_is_canonical():
    obj = json.loads(to_json(tree_ir(PAIR_TREE_MERMAID, title="t", description="d")))
    assert list(obj) == ["meta", "nodes", "edges"]
    assert list(obj["meta"]) == ["type", "title", "description"]
    assert list(obj["nodes"][0]) == ["id", "value", "depth", "position", "is_leaf"]
    assert list(obj["edges"][0]) == ["parent", "child", "position"]


def test_array_key_order():
    obj = json.loads(to_json(array_ir("flowchart LR\nA[1] --- B[2]")))
    assert list(obj) == ["meta", "elements"]
    assert list(obj["elements"][0]) == ["id", "value", "index"]


def test_round_trip_on_random_trees():
    rng = random.Random(41)
    for _ in range(100):
        ir = tree_ir(RandomTree(rng).source)
        assert from_json(to_json(ir)) == ir


def test_round_trip_on_random_arrays():
    rng = random.Random(43)
    for _ in range(50):
        src, _ = random_array_source(rng)
        ir = array_ir(src)
        assert from_json(to_json(ir)) == ir


def test_round_trip_preserves_meta():
    ir = tree_ir(PAIR_TREE_MERMAID, title="Lecture 4", description="Example tree")
    again = from_json(to_json(ir))
    assert again.meta.title == "Lecture 4"
    assert again.meta.description == "Example tree"


def test_unknown_meta_type():
    with pytest.raises(SchemaViolation):
        from_json('{"meta": {"type": "heap"}, "nodes": [], "edges": []}')


def test_json_syntax_error_has_position():
    with pytest.raises(JsonSyntaxError) as exc:
        from_json('{"meta": ')
    assert exc.value.line is not None and exc.value.column is not None


def test_missing_field_is_schema_violation():
    with pytest.raises(SchemaViolation):
        from_json('{"meta": {"type": "array"}}')


def test_unknown_field_is_schema_violation():
    good = to_json(array_ir("flowchart LR\nA[1]"))
    obj = json.loads(good)
    obj["extra"] = 1
    with pytest.raises(SchemaViolation):
        from_json(json.dumps(obj))


def test_wrong_type_is_schema_violation():
    with pytest.raises(SchemaViolation):
        from_json('{"meta": {"type": "array"}, "elements": [{"id": "A", "value": 5, "index": 0}]}')


def test_invariant_violations_rejected():
    bad = {
        "meta": {"type": "binary_tree"},
        "nodes": [
            {"id": "A", "value": "1", "depth": 0, "position": "root", "is_leaf": False},
            {"id": "B", "value": "2", "depth": 1, "position": "left", "is_leaf": True},
        ],
        "edges": [
            {"parent": "A", "child": "B", "position": "left"},
            {"parent": "B", "child": "A", "position": "left"},
        ],
    }
    with pytest.raises(IrViolation) as exc:
        from_json(json.dumps(bad))
    assert any(v.invariant == "Cycle" for v in exc.value.violations)


def test_to_json_refuses_invalid_ir():
    ir = ArborBinaryTree(
        meta=Meta("binary_tree"),
        nodes=(TreeNode("A", "1", 3, "root", True),),  # wrong depth
        edges=(),
    )
    with pytest.raises(IrViolation):
        to_json(ir)


def test_linked_list_and_grid_json_round_trip():
    ll = from_json('{"meta": {"type": "linked_list"}, "nodes": [{"id": "A", "value": "1"}]}')
    assert to_json(ll)
    grid = from_json(
        '{"meta": {"type": "2d_array"}, "rows": ['
        '{"children": [{"id": "A", "value": "1"}, {"id": "B", "value": "2"}]},'
        '{"children": [{"id": "C", "value": "3"}, {"id": "D", "value": "4"}]}]}'
    )
    assert from_json(to_json(grid)) == grid
