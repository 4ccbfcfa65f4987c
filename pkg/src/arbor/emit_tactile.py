"""Embosser-ready SVG output with Braille labels.

Trees are layered node-link drawings: circles with centered Braille values,
straight parent-to-child edges ending in filled arrowheads, depth mapping to
y and in-order position to x. Arrays are abutting boxes with the Braille
value inside and the Braille index beneath.

Braille is drawn as raised-dot geometry (filled dots at standard spacing),
never as font glyphs: embossing drivers need geometry, and it keeps the SVG
byte-deterministic. Labels are limited to three Braille cells; numeric
labels open with the number-sign cell, so any value past two digits is an
error rather than an unreadable squeeze. Overflow of the configured page is
likewise an error — a tactile graphic shrunk below fingertip resolution is
worse than none.

All dimensions are millimeters; the SVG uses a viewBox in mm user units.
"""

from __future__ import annotations

import html
import json
from dataclasses import dataclass, fields

from .errors import (
    LabelTooLong,
    PageOverflow,
    SchemaViolation,
    UnsupportedStructure,
    UntranscribableCharacter,
)
from .ir_core import ArborArray, ArborBinaryTree, ArborIr, describe

MAX_BRAILLE_CELLS = 3

_BRAILLE_BLANK = 0x2800
_NUMBER_SIGN = chr(_BRAILLE_BLANK + 0x3C)  # dots 3456
_CAPITAL_SIGN = chr(_BRAILLE_BLANK + 0x20)  # dot 6

# Grade-1 letter cells as dot bitmasks (dot k -> bit 1<<(k-1)).
_LETTER_DOTS = {
    "a": (1,), "b": (1, 2), "c": (1, 4), "d": (1, 4, 5), "e": (1, 5),
    "f": (1, 2, 4), "g": (1, 2, 4, 5), "h": (1, 2, 5), "i": (2, 4), "j": (2, 4, 5),
    "k": (1, 3), "l": (1, 2, 3), "m": (1, 3, 4), "n": (1, 3, 4, 5), "o": (1, 3, 5),
    "p": (1, 2, 3, 4), "q": (1, 2, 3, 4, 5), "r": (1, 2, 3, 5), "s": (2, 3, 4),
    "t": (2, 3, 4, 5), "u": (1, 3, 6), "v": (1, 2, 3, 6), "w": (2, 4, 5, 6),
    "x": (1, 3, 4, 6), "y": (1, 3, 4, 5, 6), "z": (1, 3, 5, 6),
}
# In numeric mode, digits reuse the a-j cells: 1..9 then 0.
_DIGIT_LETTER = {d: "abcdefghij"[i] for i, d in enumerate("1234567890")}


def _cell(dots: tuple[int, ...]) -> str:
    mask = 0
    for d in dots:
        mask |= 1 << (d - 1)
    return chr(_BRAILLE_BLANK + mask)


_LETTER_CELLS = {ch: _cell(dots) for ch, dots in _LETTER_DOTS.items()}


@dataclass(frozen=True)
class BrailleLabel:
    cells: str  # braille pattern code points, one char per cell
    print: str  # the original text


@dataclass(frozen=True)
class LegendEntry:
    braille: str
    print: str


@dataclass(frozen=True)
class PageSize:
    width_mm: float
    height_mm: float


@dataclass(frozen=True)
class TactileDoc:
    svg: str
    page: PageSize
    legend: tuple[LegendEntry, ...]


@dataclass(frozen=True)
class TactileConfig:
    """Geometry knobs; defaults target US Letter swell paper."""

    page_width_mm: float = 215.9
    page_height_mm: float = 279.4
    margin_mm: float = 12.7
    node_radius_mm: float = 16.0
    min_gap_mm: float = 6.0
    min_stroke_mm: float = 1.5
    arrowhead_mm: float = 4.0
    box_width_mm: float = 20.0
    box_height_mm: float = 20.0
    index_offset_mm: float = 4.0

    @classmethod
    def from_dict(cls, obj: dict) -> "TactileConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(obj) - known
        if unknown:
            raise SchemaViolation(
                f"unknown tactile config fields: {', '.join(sorted(unknown))}"
            )
        for key, value in obj.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
                raise SchemaViolation(f"tactile config field {key!r} must be a positive number")
        return cls(**{k: float(v) for k, v in obj.items()})

    @classmethod
    def from_json(cls, text: str) -> "TactileConfig":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"tactile config is not valid JSON: {exc.msg}") from exc
        if not isinstance(obj, dict):
            raise SchemaViolation("tactile config must be a JSON object")
        return cls.from_dict(obj)


def transcribe_braille(label: str) -> BrailleLabel:
    """Transcribe a short label to Braille cells (UEB numeric mode, grade 1).

    Digit runs open with the number sign; uppercase letters take a capital
    prefix. The result must fit MAX_BRAILLE_CELLS cells.
    """

    if not label:
        raise UntranscribableCharacter("cannot transcribe an empty label")
    cells: list[str] = []
    numeric_mode = False
    for ch in label:
        if ch.isdigit() and ch in _DIGIT_LETTER:
            if not numeric_mode:
                cells.append(_NUMBER_SIGN)
                numeric_mode = True
            cells.append(_LETTER_CELLS[_DIGIT_LETTER[ch]])
        elif ch.lower() in _LETTER_CELLS:
            numeric_mode = False
            if ch.isupper():
                cells.append(_CAPITAL_SIGN)
            cells.append(_LETTER_CELLS[ch.lower()])
        else:
            raise UntranscribableCharacter(
                f"character {ch!r} in label {label!r} has no Braille transcription"
            )
    if len(cells) > MAX_BRAILLE_CELLS:
        raise LabelTooLong(
            f"label {label!r} needs {len(cells)} Braille cells; the limit is {MAX_BRAILLE_CELLS}"
        )
    return BrailleLabel(cells="".join(cells), print=label)


# Standard braille cell geometry (mm): dot pitch within a cell, advance
# between cells, and the drawn dot radius.
_DOT_PITCH = 2.5
_CELL_ADVANCE = 6.0
_DOT_RADIUS = 0.75

# Offsets of dots 1..6 within a cell, as (column, row).
_DOT_GRID = {1: (0, 0), 2: (0, 1), 3: (0, 2), 4: (1, 0), 5: (1, 1), 6: (1, 2)}


def _braille_extent(n_cells: int) -> tuple[float, float]:
    width = (n_cells - 1) * _CELL_ADVANCE + _DOT_PITCH + 2 * _DOT_RADIUS
    height = 2 * _DOT_PITCH + 2 * _DOT_RADIUS
    return width, height


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _braille_paths(label: BrailleLabel, center_x: float, center_y: float) -> list[str]:
    """Filled dot paths for the label, centered on (center_x, center_y)."""

    width, height = _braille_extent(len(label.cells))
    origin_x = center_x - width / 2 + _DOT_RADIUS
    origin_y = center_y - height / 2 + _DOT_RADIUS
    paths = []
    for i, cell_char in enumerate(label.cells):
        mask = ord(cell_char) - _BRAILLE_BLANK
        cell_x = origin_x + i * _CELL_ADVANCE
        for dot, (col, row) in _DOT_GRID.items():
            if mask & (1 << (dot - 1)):
                cx = cell_x + col * _DOT_PITCH
                cy = origin_y + row * _DOT_PITCH
                r = _DOT_RADIUS
                paths.append(
                    f'<path class="braille-dot" d="M {_fmt(cx - r)} {_fmt(cy)} '
                    f"a {_fmt(r)} {_fmt(r)} 0 1 0 {_fmt(2 * r)} 0 "
                    f'a {_fmt(r)} {_fmt(r)} 0 1 0 {_fmt(-2 * r)} 0 Z" fill="black"/>'
                )
    return paths


def _svg_document(cfg: TactileConfig, title: str, body: list[str]) -> str:
    w, h = _fmt(cfg.page_width_mm), _fmt(cfg.page_height_mm)
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}mm" height="{h}mm" '
        f'viewBox="0 0 {w} {h}" version="1.1">',
        f"  <title>{html.escape(title)}</title>",
    ]
    return "\n".join(head + [f"  {line}" for line in body] + ["</svg>"])


def _legend(labels: list[BrailleLabel]) -> tuple[LegendEntry, ...]:
    seen = set()
    out = []
    for lab in labels:
        if lab.print not in seen:
            seen.add(lab.print)
            out.append(LegendEntry(braille=lab.cells, print=lab.print))
    return tuple(out)


def _check_label_fits(label: BrailleLabel, max_width: float, max_height: float, where: str) -> None:
    width, height = _braille_extent(len(label.cells))
    if width > max_width or height > max_height:
        raise PageOverflow(
            f"Braille label {label.print!r} ({_fmt(width)}x{_fmt(height)} mm) does not fit "
            f"inside {where} ({_fmt(max_width)}x{_fmt(max_height)} mm); "
            "enlarge the geometry instead of shrinking below tactile minimums"
        )


def layout_tree(ir: ArborBinaryTree, cfg: TactileConfig | None = None) -> TactileDoc:
    """Lay out a validated tree: depth to layers, in-order position to x."""

    cfg = cfg or TactileConfig()
    labels = {n.id: transcribe_braille(n.value) for n in ir.nodes}
    # The widest label must fit within the circle's inner chord.
    inner = 2 * cfg.node_radius_mm * 0.85
    for lab in labels.values():
        _check_label_fits(lab, inner, inner, f"a node circle of radius {_fmt(cfg.node_radius_mm)} mm")

    children = {n.id: ir.children(n.id) for n in ir.nodes}
    inorder: dict[str, int] = {}

    def walk(node_id: str) -> None:
        kids = children[node_id]
        if "left" in kids:
            walk(kids["left"])
        inorder[node_id] = len(inorder)
        if "right" in kids:
            walk(kids["right"])

    walk(ir.root().id)

    radius = cfg.node_radius_mm
    # Consecutive in-order nodes are always ancestor/descendant, never at the
    # same depth, so same-level nodes sit at least two slots apart: half the
    # vertical step per slot still keeps same-level centers 2r+gap apart.
    y_step = 2 * radius + cfg.min_gap_mm
    x_step = y_step / 2
    max_depth = max(n.depth for n in ir.nodes)
    needed_w = 2 * radius + (len(ir.nodes) - 1) * x_step
    needed_h = 2 * radius + max_depth * y_step
    avail_w = cfg.page_width_mm - 2 * cfg.margin_mm
    avail_h = cfg.page_height_mm - 2 * cfg.margin_mm
    if needed_w > avail_w or needed_h > avail_h:
        raise PageOverflow(
            f"tree needs {_fmt(needed_w)}x{_fmt(needed_h)} mm but the printable area is "
            f"{_fmt(avail_w)}x{_fmt(avail_h)} mm"
        )

    x0 = cfg.margin_mm + (avail_w - needed_w) / 2 + radius
    y0 = cfg.margin_mm + radius
    pos = {
        n.id: (x0 + inorder[n.id] * x_step, y0 + n.depth * y_step)
        for n in ir.nodes
    }

    side = cfg.arrowhead_mm
    body: list[str] = [
        "<defs>",
        f'  <marker id="arrow" markerWidth="{_fmt(side)}" markerHeight="{_fmt(side)}" '
        f'refX="{_fmt(side)}" refY="{_fmt(side / 2)}" orient="auto" markerUnits="userSpaceOnUse">',
        f'    <path d="M 0 0 L {_fmt(side)} {_fmt(side / 2)} L 0 {_fmt(side)} Z" fill="black"/>',
        "  </marker>",
        "</defs>",
    ]
    for e in ir.edges:
        px, py = pos[e.parent]
        cx, cy = pos[e.child]
        dx, dy = cx - px, cy - py
        dist = (dx * dx + dy * dy) ** 0.5
        ux, uy = dx / dist, dy / dist
        x1, y1 = px + ux * radius, py + uy * radius
        x2, y2 = cx - ux * radius, cy - uy * radius
        body.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="black" stroke-width="{_fmt(cfg.min_stroke_mm)}" marker-end="url(#arrow)"/>'
        )
    for n in ir.nodes:
        cx, cy = pos[n.id]
        body.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius)}" '
            f'fill="none" stroke="black" stroke-width="{_fmt(cfg.min_stroke_mm)}"/>'
        )
        body.extend(_braille_paths(labels[n.id], cx, cy))

    legend_labels = [labels[n.id] for n in ir.nodes]
    return TactileDoc(
        svg=_svg_document(cfg, ir.meta.title or describe(ir), body),
        page=PageSize(cfg.page_width_mm, cfg.page_height_mm),
        legend=_legend(legend_labels),
    )


def layout_array(ir: ArborArray, cfg: TactileConfig | None = None) -> TactileDoc:
    """Lay out a validated array: abutting boxes, Braille indices beneath."""

    cfg = cfg or TactileConfig()
    value_labels = [transcribe_braille(e.value) for e in ir.elements]
    index_labels = [transcribe_braille(str(e.index)) for e in ir.elements]
    box_w, box_h = cfg.box_width_mm, cfg.box_height_mm
    for lab in value_labels:
        _check_label_fits(lab, box_w - 2, box_h - 2, f"a {_fmt(box_w)}x{_fmt(box_h)} mm box")
    _, braille_h = _braille_extent(1)
    for lab in index_labels:
        _check_label_fits(lab, box_w - 2, braille_h + 1, "the index row")

    n = len(ir.elements)
    strip_w = n * box_w
    strip_h = box_h + cfg.index_offset_mm + braille_h
    avail_w = cfg.page_width_mm - 2 * cfg.margin_mm
    avail_h = cfg.page_height_mm - 2 * cfg.margin_mm
    if strip_w > avail_w or strip_h > avail_h:
        raise PageOverflow(
            f"array strip needs {_fmt(strip_w)}x{_fmt(strip_h)} mm but the printable area is "
            f"{_fmt(avail_w)}x{_fmt(avail_h)} mm"
        )

    x0 = cfg.margin_mm + (avail_w - strip_w) / 2
    y0 = cfg.margin_mm + (avail_h - strip_h) / 2
    body: list[str] = []
    for i, e in enumerate(ir.elements):
        bx = x0 + i * box_w
        body.append(
            f'<rect x="{_fmt(bx)}" y="{_fmt(y0)}" width="{_fmt(box_w)}" height="{_fmt(box_h)}" '
            f'fill="none" stroke="black" stroke-width="{_fmt(cfg.min_stroke_mm)}"/>'
        )
        body.extend(_braille_paths(value_labels[i], bx + box_w / 2, y0 + box_h / 2))
        index_cy = y0 + box_h + cfg.index_offset_mm + braille_h / 2
        body.extend(_braille_paths(index_labels[i], bx + box_w / 2, index_cy))

    return TactileDoc(
        svg=_svg_document(cfg, ir.meta.title or describe(ir), body),
        page=PageSize(cfg.page_width_mm, cfg.page_height_mm),
        legend=_legend(value_labels + index_labels),
    )


def layout_tactile(ir: ArborIr, cfg: TactileConfig | None = None) -> TactileDoc:
    """Dispatch to the layout for the IR's structure type."""

    if isinstance(ir, ArborBinaryTree):
        return layout_tree(ir, cfg)
    if isinstance(ir, ArborArray):
        return layout_array(ir, cfg)
    raise UnsupportedStructure(
        f"no tactile emitter for {ir.meta.type!r} (supported: array, binary_tree)"
    )
