"""Compile text-based data structure diagrams into accessible outputs.

The pipeline: parse a Mermaid or DOT source into a language-neutral AST,
compile it into a validated intermediate representation, then emit any of
three synchronized renderings — an accessible HTML table, screen-reader
navigable HTML with keyboard tree semantics, and embosser-ready tactile SVG
with Braille labels — plus an auto-generated description and canonical IR
JSON. A CLI (`arbor compile`, `arbor serve`) and an HTTP compile service
wrap the same pure core.
"""

from .bundle import FORMATS, CompileRequest, OutputBundle, compile_request
from .emit_navigable import (
    NavCommand,
    NavigableDoc,
    NavState,
    emit_navigable,
    initial_nav_state,
    nav_step,
)
from .emit_tabular import ARRAY_COLUMNS, TREE_COLUMNS, TabularDoc, emit_table
from .emit_tactile import (
    BrailleLabel,
    TactileConfig,
    TactileDoc,
    layout_array,
    layout_tactile,
    layout_tree,
    transcribe_braille,
)
from .errors import DiagramError, ErrorRecord
from .ir_core import (
    Arbor2DArray,
    ArborArray,
    ArborBinaryTree,
    ArborLinkedList,
    ArrayElement,
    GridRow,
    ListNode,
    Meta,
    SearchTraceStep,
    TreeEdge,
    TreeNode,
    Violation,
    binary_search_trace,
    check_bst,
    child_of,
    compile_array,
    compile_tree,
    describe,
    find_value,
    from_json,
    is_sorted_increasing,
    leaves,
    to_json,
    validate_ir,
)
from .spec_parser import AstEdge, AstNode, DiagramAst, SourceSpec, parse, parse_dot, parse_mermaid

__version__ = "0.1.0"

__all__ = [
    "ARRAY_COLUMNS",
    "Arbor2DArray",
    "ArborArray",
    "ArborBinaryTree",
    "ArborLinkedList",
    "ArrayElement",
    "AstEdge",
    "AstNode",
    "BrailleLabel",
    "CompileRequest",
    "DiagramAst",
    "DiagramError",
    "ErrorRecord",
    "FORMATS",
    "GridRow",
    "ListNode",
    "Meta",
    "NavCommand",
    "NavState",
    "NavigableDoc",
    "OutputBundle",
    "SearchTraceStep",
    "SourceSpec",
    "TREE_COLUMNS",
    "TabularDoc",
    "TactileConfig",
    "TactileDoc",
    "TreeEdge",
    "TreeNode",
    "Violation",
    "binary_search_trace",
    "check_bst",
    "child_of",
    "compile_array",
    "compile_request",
    "compile_tree",
    "describe",
    "emit_navigable",
    "emit_table",
    "find_value",
    "from_json",
    "initial_nav_state",
    "is_sorted_increasing",
    "layout_array",
    "layout_tactile",
    "layout_tree",
    "leaves",
    "nav_step",
    "parse",
    "parse_dot",
    "parse_mermaid",
    "to_json",
    "transcribe_braille",
    "validate_ir",
]
