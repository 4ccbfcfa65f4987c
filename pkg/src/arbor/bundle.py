"""One compile pipeline shared by the CLI and the HTTP service.

A CompileRequest names the source, its language/structure, and the output
formats wanted; the bundle always carries the canonical IR JSON and the
description, plus whichever renderings were requested — all derived from the
single compiled IR, so the outputs can never disagree about the structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .emit_navigable import NavigableDoc, emit_navigable
from .emit_tabular import TabularDoc, emit_table
from .emit_tactile import TactileConfig, TactileDoc, layout_tactile
from .errors import UnsupportedStructure
from .ir_core import compile_array, compile_tree, describe, to_json
from .spec_parser import SourceSpec, parse

FORMATS = ("tabular", "navigable", "tactile", "ir", "description")


@dataclass(frozen=True)
class CompileRequest:
    source: str
    language: str
    structure: str
    formats: tuple[str, ...]
    title: str | None = None
    description: str | None = None
    tactile_config: TactileConfig | None = None


@dataclass(frozen=True)
class OutputBundle:
    ir_json: str
    description: str
    tabular: TabularDoc | None = None
    navigable: NavigableDoc | None = None
    tactile: TactileDoc | None = None

    def to_dict(self) -> dict:
        out: dict = {"ir_json": self.ir_json, "description": self.description}
        out["tabular"] = (
            {
                "html": self.tabular.html,
                "csv": self.tabular.csv,
                "column_names": list(self.tabular.column_names),
            }
            if self.tabular
            else None
        )
        out["navigable"] = (
            {"html": self.navigable.html, "nav_model": self.navigable.nav_model}
            if self.navigable
            else None
        )
        out["tactile"] = (
            {
                "svg": self.tactile.svg,
                "page": {
                    "width_mm": self.tactile.page.width_mm,
                    "height_mm": self.tactile.page.height_mm,
                },
                "legend": [
                    {"braille": entry.braille, "print": entry.print}
                    for entry in self.tactile.legend
                ],
            }
            if self.tactile
            else None
        )
        return out


def compile_request(req: CompileRequest) -> OutputBundle:
    """Run the full pipeline; raises DiagramError subclasses on any failure."""

    if req.structure not in ("array", "binary_tree"):
        raise UnsupportedStructure(
            f"sources can only be compiled as 'array' or 'binary_tree', not {req.structure!r}"
        )
    spec = SourceSpec(
        text=req.source,
        language=req.language,
        structure=req.structure,
        title=req.title,
        description=req.description,
    )
    ast = parse(spec)
    if req.structure == "binary_tree":
        ir = compile_tree(ast, title=req.title, description=req.description)
    else:
        ir = compile_array(ast, title=req.title, description=req.description)

    return OutputBundle(
        ir_json=to_json(ir),
        description=describe(ir),
        tabular=emit_table(ir) if "tabular" in req.formats else None,
        navigable=emit_navigable(ir) if "navigable" in req.formats else None,
        tactile=layout_tactile(ir, req.tactile_config) if "tactile" in req.formats else None,
    )
