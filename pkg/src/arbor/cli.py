"""Batch compiler CLI.

Exit codes: 0 success, 1 parse/compile failure (structured error on stderr
as single-line JSON), 2 usage errors. Output files are staged and moved into
place only after every requested format rendered, so a failure never leaves
partial output behind.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .bundle import CompileRequest, OutputBundle, compile_request
from .emit_tactile import TactileConfig
from .errors import DiagramError

_CLI_FORMATS = ("tabular", "navigable", "tactile", "ir", "description", "all")
_ALL_FORMATS = ("tabular", "navigable", "tactile", "ir", "description")

_SUFFIXES = {
    "tabular": ".table.html",
    "navigable": ".nav.html",
    "tactile": ".tactile.svg",
    "ir": ".ir.json",
    "description": ".txt",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arbor",
        description="Compile diagram specifications into accessible outputs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compile", help="compile a source file (or stdin) to output files")
    comp.add_argument("input", nargs="?", help="source file; omit or use '-' for stdin")
    comp.add_argument("--lang", required=True, choices=["mermaid", "dot"])
    comp.add_argument("--structure", required=True, choices=["array", "binary-tree"])
    comp.add_argument(
        "--format",
        action="append",
        required=True,
        choices=list(_CLI_FORMATS),
        dest="formats",
        help="output format; repeatable, or 'all'",
    )
    comp.add_argument("--out-dir", help="directory for output files (default: current dir)")
    comp.add_argument("-o", "--output", help="output file path; only with a single format")
    comp.add_argument("--title")
    comp.add_argument("--description")
    comp.add_argument("--tactile-config", help="JSON file with tactile geometry overrides")

    srv = sub.add_parser("serve", help="run the compile service and editor")
    srv.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("ARBOR_PORT", "8000")),
        help="port to listen on (default: $ARBOR_PORT or 8000)",
    )
    srv.add_argument("--host", default="127.0.0.1", help="bind address (default: loopback)")
    srv.add_argument("--static-dir", help="editor assets directory (default: bundled assets)")
    return parser


def _usage_error(parser: argparse.ArgumentParser, message: str) -> int:
    print(f"{parser.prog}: error: {message}", file=sys.stderr)
    return 2


def _read_source(parser: argparse.ArgumentParser, path_arg: str | None) -> tuple[str, str] | int:
    """Returns (source text, output stem) or an exit code on usage error."""

    if path_arg in (None, "-"):
        return sys.stdin.read(), "diagram"
    path = Path(path_arg)
    try:
        return path.read_text(encoding="utf-8"), path.stem
    except OSError as exc:
        return _usage_error(parser, f"cannot read {path_arg!r}: {exc}")


def _write_outputs(bundle: OutputBundle, formats: tuple[str, ...], targets: dict[str, Path]) -> None:
    contents: dict[Path, str] = {}
    for fmt in formats:
        target = targets[fmt]
        if fmt == "tabular":
            contents[target] = bundle.tabular.html + "\n"
        elif fmt == "navigable":
            contents[target] = bundle.navigable.html + "\n"
        elif fmt == "tactile":
            contents[target] = bundle.tactile.svg + "\n"
        elif fmt == "ir":
            contents[target] = bundle.ir_json + "\n"
        else:
            contents[target] = bundle.description + "\n"
    # Stage everything, then move: either all outputs appear or none do.
    staged: list[tuple[str, Path]] = []
    try:
        for target, text in contents.items():
            fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
            staged.append((tmp, target))
        for tmp, target in staged:
            os.replace(tmp, target)
    except BaseException:
        for tmp, _ in staged:
            try:
                os.unlink(tmp)
            except OSError:
                pass
        raise


def _run_compile(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    formats: tuple[str, ...]
    if "all" in args.formats:
        formats = _ALL_FORMATS
    else:
        formats = tuple(dict.fromkeys(args.formats))

    if args.output and args.out_dir:
        return _usage_error(parser, "-o/--output and --out-dir are mutually exclusive")
    if args.output and len(formats) != 1:
        return _usage_error(parser, "-o/--output requires exactly one --format")

    source = _read_source(parser, args.input)
    if isinstance(source, int):
        return source
    text, stem = source

    tactile_config = None
    if args.tactile_config:
        try:
            config_text = Path(args.tactile_config).read_text(encoding="utf-8")
        except OSError as exc:
            return _usage_error(parser, f"cannot read {args.tactile_config!r}: {exc}")
        try:
            tactile_config = TactileConfig.from_json(config_text)
        except DiagramError as exc:
            print(json.dumps(exc.record.to_dict()), file=sys.stderr)
            return 1

    request = CompileRequest(
        source=text,
        language=args.lang,
        structure=args.structure.replace("-", "_"),
        formats=formats,
        title=args.title,
        description=args.description,
        tactile_config=tactile_config,
    )
    try:
        bundle = compile_request(request)
    except DiagramError as exc:
        print(json.dumps(exc.record.to_dict()), file=sys.stderr)
        return 1

    if args.output:
        targets = {formats[0]: Path(args.output)}
    else:
        out_dir = Path(args.out_dir) if args.out_dir else Path.cwd()
        out_dir.mkdir(parents=True, exist_ok=True)
        targets = {fmt: out_dir / f"{stem}{_SUFFIXES[fmt]}" for fmt in formats}
    _write_outputs(bundle, formats, targets)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compile":
        return _run_compile(parser, args)
    from .service import serve  # imported lazily: uvicorn startup is slow

    serve(port=args.port, host=args.host, static_dir=args.static_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
