"""Stateless JSON-over-HTTP facade for the fiber, projection, and link math.

Every response is a pure function of the query, so compute endpoints carry a
Cache-Control header permitting indefinite caching.  Serialization goes
through :mod:`hopf_atlas.documents`, which keeps the bytes identical to the
CLI's output for the same parameters.  Static UI assets, when present, are
served from the directory given to :func:`create_app`.
"""

from __future__ import annotations

import argparse
import os
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import __version__, documents, fibration, linkage
from .errors import ParseError, ToolkitError
from .vecs import as_unit_vector

CACHE_FOREVER = "public, max-age=31536000, immutable"
MAX_BATCH = 512

_FALLBACK_INDEX = """<!doctype html>
<html><head><title>hopf-atlas service</title></head>
<body><h1>hopf-atlas service</h1>
<p>No UI bundle is installed. The JSON API lives under <code>/api/</code>:
<code>/api/health</code>, <code>/api/fiber</code>, <code>/api/fibers</code>,
<code>/api/link</code>.</p></body></html>
"""


def _error_response(code: str, message: str, detail: dict | None,
                    status: int) -> Response:
    body: dict[str, Any] = {"code": code, "message": message}
    if detail:
        body["detail"] = detail
    return Response(
        content=documents.emit_json(body) + "\n",
        status_code=status,
        media_type="application/json",
    )


def _toolkit_error_response(exc: ToolkitError) -> Response:
    status = 400 if isinstance(exc, ParseError) else 422
    return _error_response(exc.code, str(exc), exc.detail, status)


def _parse_float(raw: str, name: str) -> float:
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise ParseError(f"query parameter {name!r} must be a number, got {raw!r}")


def _parse_samples(raw: str, name: str = "samples") -> int:
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise ParseError(f"query parameter {name!r} must be an integer, got {raw!r}")


def _json_body(content: str) -> Response:
    return Response(
        content=content,
        media_type="application/json",
        headers={"Cache-Control": CACHE_FOREVER},
    )


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="hopf-atlas", version=__version__, docs_url=None,
                  redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.exception_handler(ToolkitError)
    async def _on_toolkit_error(_request: Request, exc: ToolkitError) -> Response:
        return _toolkit_error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def _on_validation_error(_request: Request,
                                   exc: RequestValidationError) -> Response:
        return _error_response("parse", "malformed request", {"errors": str(exc)}, 400)

    @app.get("/api/health")
    def health() -> Response:
        return Response(
            content=documents.emit_json({"status": "ok", "version": __version__}) + "\n",
            media_type="application/json",
        )

    @app.get("/api/fiber")
    def fiber(p1: str, p2: str, p3: str, samples: str = "256",
              gauge: str = "auto") -> Response:
        point = as_unit_vector(
            [_parse_float(p1, "p1"), _parse_float(p2, "p2"), _parse_float(p3, "p3")], 3
        )
        fb = fibration.fiber(point, gauge_kind=gauge, n_samples=_parse_samples(samples))
        return _json_body(documents.fiber_json(fb))

    @app.post("/api/fibers")
    async def fibers(request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            raise ParseError("request body must be JSON")
        if not isinstance(payload, dict) or "points" not in payload:
            raise ParseError('request body must be {"points": [[p1,p2,p3], ...]}')
        points = payload["points"]
        if not isinstance(points, list):
            raise ParseError('"points" must be a list of 3-element lists')
        if len(points) > MAX_BATCH:
            raise ParseError(f"at most {MAX_BATCH} points per request, got {len(points)}")
        samples = payload.get("samples", 256)
        if not isinstance(samples, int) or isinstance(samples, bool):
            raise ParseError('"samples" must be an integer')

        docs = []
        for index, entry in enumerate(points):
            try:
                if (not isinstance(entry, list) or len(entry) != 3
                        or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                                   for x in entry)):
                    raise ParseError("each point must be a list of 3 numbers")
                point = as_unit_vector([float(x) for x in entry], 3)
                fb = fibration.fiber(point, gauge_kind="auto", n_samples=samples)
                docs.append(documents.fiber_document(fb))
            except ToolkitError as exc:
                exc.detail = {**exc.detail, "index": index}
                raise
        return _json_body(documents.emit_json({"fibers": docs}) + "\n")

    @app.get("/api/link")
    def link(pa1: str, pa2: str, pa3: str, pb1: str, pb2: str, pb3: str,
             samples: str = "256") -> Response:
        pa = as_unit_vector(
            [_parse_float(pa1, "pa1"), _parse_float(pa2, "pa2"), _parse_float(pa3, "pa3")], 3
        )
        pb = as_unit_vector(
            [_parse_float(pb1, "pb1"), _parse_float(pb2, "pb2"), _parse_float(pb3, "pb3")], 3
        )
        report = linkage.pairwise_link_check(pa, pb, n_samples=_parse_samples(samples))
        return _json_body(documents.pair_report_json(report))

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:
        @app.get("/")
        def index() -> Response:
            return Response(content=_FALLBACK_INDEX, media_type="text/html")

    return app


def run(host: str = "127.0.0.1", port: int = 8080,
        static_dir: str | None = None) -> None:
    import uvicorn

    if static_dir is None:
        candidate = os.path.join(os.getcwd(), "frontend", "dist")
        static_dir = candidate if os.path.isdir(candidate) else None
    uvicorn.run(create_app(static_dir), host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="hopf-atlas-service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8080)
    parser.add_argument("--static", default=None)
    args = parser.parse_args(argv)
    run(host=args.host, port=args.port, static_dir=args.static)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
