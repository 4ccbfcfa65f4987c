"""Local HTTP compile service; also hosts the web editor's static assets.

Endpoints:
  POST /api/compile   CompileRequest JSON in, OutputBundle JSON out.
                      400 malformed request, 413 source over 256 KiB,
                      422 parse/compile failure (the error record verbatim).
  GET  /api/health    "ok"
  GET  /*             editor static assets

Handlers call only pure core functions; requests are stateless and
independent, so any number can run concurrently.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import FileResponse, JSONResponse, PlainTextResponse

from .bundle import FORMATS, CompileRequest, compile_request
from .emit_tactile import TactileConfig
from .errors import DiagramError
from .spec_parser import LANGUAGES, STRUCTURES

MAX_SOURCE_BYTES = 256 * 1024

_DEFAULT_STATIC_DIR = Path(__file__).parent / "static"


class _BadRequest(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _error_body(code: str, message: str, line: int | None = None, column: int | None = None) -> dict:
    return {"code": code, "message": message, "line": line, "column": column}


def _parse_compile_request(raw: bytes) -> CompileRequest:
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _BadRequest(f"request body is not valid JSON: {exc.msg}")
    if not isinstance(obj, dict):
        raise _BadRequest("request body must be a JSON object")

    known = {"source", "language", "structure", "format", "title", "description", "tactile_config"}
    unknown = set(obj) - known
    if unknown:
        raise _BadRequest(f"unknown request fields: {', '.join(sorted(unknown))}")

    source = obj.get("source")
    if not isinstance(source, str):
        raise _BadRequest("'source' must be a string")
    language = obj.get("language")
    if language not in LANGUAGES:
        raise _BadRequest(f"'language' must be one of {list(LANGUAGES)}")
    structure = obj.get("structure")
    if structure not in STRUCTURES:
        raise _BadRequest(f"'structure' must be one of {list(STRUCTURES)}")
    formats = obj.get("format")
    if not isinstance(formats, list) or not formats:
        raise _BadRequest("'format' must be a non-empty list")
    for fmt in formats:
        if fmt not in FORMATS:
            raise _BadRequest(f"unknown format {fmt!r}; expected one of {list(FORMATS)}")
    title = obj.get("title")
    if title is not None and not isinstance(title, str):
        raise _BadRequest("'title' must be a string")
    description = obj.get("description")
    if description is not None and not isinstance(description, str):
        raise _BadRequest("'description' must be a string")
    tactile_config = None
    raw_config = obj.get("tactile_config")
    if raw_config is not None:
        if not isinstance(raw_config, dict):
            raise _BadRequest("'tactile_config' must be a JSON object")
        try:
            tactile_config = TactileConfig.from_dict(raw_config)
        except DiagramError as exc:
            raise _BadRequest(exc.message)

    return CompileRequest(
        source=source,
        language=language,
        structure=structure,
        formats=tuple(formats),
        title=title,
        description=description,
        tactile_config=tactile_config,
    )


def create_app(static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="arbor compile service", docs_url=None, redoc_url=None)
    assets = Path(static_dir) if static_dir else _DEFAULT_STATIC_DIR

    @app.post("/api/compile")
    async def compile_endpoint(request: Request):
        raw = await request.body()
        try:
            req = _parse_compile_request(raw)
        except _BadRequest as exc:
            return JSONResponse(_error_body("BadRequest", exc.message), status_code=400)
        if len(req.source.encode("utf-8")) > MAX_SOURCE_BYTES:
            return JSONResponse(
                _error_body(
                    "SourceTooLarge",
                    f"source exceeds {MAX_SOURCE_BYTES} bytes",
                ),
                status_code=413,
            )
        try:
            bundle = compile_request(req)
        except DiagramError as exc:
            return JSONResponse(exc.record.to_dict(), status_code=422)
        return JSONResponse(bundle.to_dict())

    @app.get("/api/health")
    async def health():
        return PlainTextResponse("ok")

    @app.get("/{path:path}")
    async def static_assets(path: str):
        root = assets.resolve()
        if not root.is_dir():
            return PlainTextResponse("no editor assets installed", status_code=404)
        candidate = (root / (path or "index.html")).resolve()
        if candidate.is_dir():
            candidate = candidate / "index.html"
        # keep resolved paths inside the assets root
        if not candidate.is_relative_to(root) or not candidate.is_file():
            return PlainTextResponse("not found", status_code=404)
        return FileResponse(candidate)

    return app


def serve(port: int, host: str = "127.0.0.1", static_dir: str | Path | None = None) -> None:
    """Run the service until interrupted."""

    import uvicorn

    uvicorn.run(create_app(static_dir), host=host, port=port)
