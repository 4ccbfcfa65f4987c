"""Tabular output: structural roles as columns, not prose.

Arrays become Index/Value tables; trees become one row per node with its
value, parent, positional role, and both children spelled out, so
relationships never have to be inferred. Absent relatives are the literal
word "None" — audible to a screen reader where an empty cell is silence.
"""

from __future__ import annotations

import csv
import html
import io
from dataclasses import dataclass

from .errors import UnsupportedStructure
from .ir_core import ArborArray, ArborBinaryTree, ArborIr, describe

TREE_COLUMNS = ("Value", "Parent", "Position", "Left Child", "Right Child")
ARRAY_COLUMNS = ("Index", "Value")

_ABSENT = "None"


@dataclass(frozen=True)
class TabularDoc:
    html: str
    csv: str
    column_names: tuple[str, ...]


def _tree_rows(ir: ArborBinaryTree) -> list[tuple[str, ...]]:
    """Rows in breadth-first order, root first; relatives shown by value."""

    value = {n.id: n.value for n in ir.nodes}
    rows = []
    queue = [ir.root().id]
    while queue:
        node_id = queue.pop(0)
        parent_id = ir.parent_of(node_id)
        kids = ir.children(node_id)
        rows.append(
            (
                value[node_id],
                value[parent_id] if parent_id is not None else _ABSENT,
                ir.node(node_id).position,
                value[kids["left"]] if "left" in kids else _ABSENT,
                value[kids["right"]] if "right" in kids else _ABSENT,
            )
        )
        for side in ("left", "right"):
            if side in kids:
                queue.append(kids[side])
    return rows


def _array_rows(ir: ArborArray) -> list[tuple[str, ...]]:
    return [(str(e.index), e.value) for e in ir.elements]


def _to_csv(columns: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def _to_html(caption: str, columns: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    parts = ['<table class="arbor-table">']
    parts.append(f"  <caption>{html.escape(caption)}</caption>")
    parts.append("  <thead>")
    parts.append("    <tr>" + "".join(f'<th scope="col">{html.escape(c)}</th>' for c in columns) + "</tr>")
    parts.append("  </thead>")
    parts.append("  <tbody>")
    for row in rows:
        cells = [f'<th scope="row">{html.escape(row[0])}</th>']
        cells.extend(f"<td>{html.escape(cell)}</td>" for cell in row[1:])
        parts.append("    <tr>" + "".join(cells) + "</tr>")
    parts.append("  </tbody>")
    parts.append("</table>")
    return "\n".join(parts)


def emit_table(ir: ArborIr) -> TabularDoc:
    """Render a validated array or binary tree IR as an HTML table plus CSV."""

    if isinstance(ir, ArborBinaryTree):
        columns: tuple[str, ...] = TREE_COLUMNS
        rows = _tree_rows(ir)
    elif isinstance(ir, ArborArray):
        columns = ARRAY_COLUMNS
        rows = _array_rows(ir)
    else:
        raise UnsupportedStructure(
            f"no tabular emitter for {ir.meta.type!r} (supported: array, binary_tree)"
        )
    caption = ir.meta.title if ir.meta.title else describe(ir)
    return TabularDoc(
        html=_to_html(caption, columns, rows),
        csv=_to_csv(columns, rows),
        column_names=columns,
    )
