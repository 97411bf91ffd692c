"""Stateless HTTP endpoints for parsing and exporting statements.

POST /v1/parse takes a coded statement plus output options and returns
the rendered export with complexity metrics.  Every response is a pure
function of the request body; configuration (port, body size limit,
allowed origin) is read once at startup from the environment.

Validation failures come back as status 400 with a positioned issue:
``{"error": {"kind", "message", "position", "length"}}``.  Bodies over
the size limit get 413.
"""

from __future__ import annotations

import os
from typing import Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .model import Level
from .parser import Issue, parse_with_report
from .tabular import TabularOptions, to_csv, to_sheets
from .transform import degree_of_variability, expand, filter_level
from .visual import to_tree

DEFAULT_MAX_BODY_BYTES = 1024 * 1024


class ParseRequest(BaseModel):
    rawStatement: str | None = None
    codedStatement: str
    output: Literal["csv", "sheets", "tree"] = "csv"
    stmtId: str = "1"
    level: Literal["core", "extended", "logico"] = "logico"
    includeHeaders: bool = True
    includeAnnotations: bool = False
    includeProperties: bool = True
    conditionsFirst: bool = False


def _issue_payload(issue: Issue) -> dict:
    return {
        "kind": issue.kind.value,
        "message": issue.message,
        "position": issue.position,
        "length": issue.length,
    }


def _error_response(status: int, kind: str, message: str,
                    position: int = 0, length: int = 0) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"kind": kind, "message": message,
                           "position": position, "length": length}},
    )


def create_app(max_body_bytes: int | None = None,
               allowed_origin: str | None = None) -> FastAPI:
    if max_body_bytes is None:
        max_body_bytes = int(os.environ.get("MAX_BODY_BYTES",
                                            DEFAULT_MAX_BODY_BYTES))
    if allowed_origin is None:
        allowed_origin = os.environ.get("ALLOWED_ORIGIN", "*")

    app = FastAPI(title="igscript", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[allowed_origin],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def schema_error(request: Request,
                           exc: RequestValidationError) -> JSONResponse:
        first = exc.errors()[0] if exc.errors() else {}
        loc = ".".join(str(p) for p in first.get("loc", ()) if p != "body")
        msg = first.get("msg", "invalid request body")
        detail = f"{loc}: {msg}" if loc else msg
        return _error_response(400, "SchemaViolation", detail)

    @app.middleware("http")
    async def limit_body(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None:
            try:
                if int(length) > max_body_bytes:
                    return _error_response(
                        413, "BodyTooLarge",
                        f"request body exceeds {max_body_bytes} bytes")
            except ValueError:
                pass
        return await call_next(request)

    @app.get("/v1/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/parse")
    async def parse_statement(req: ParseRequest) -> JSONResponse:
        tree, report = parse_with_report(req.codedStatement)
        if not report.ok:
            issue = report.errors[0]
            return JSONResponse(status_code=400,
                                content={"error": _issue_payload(issue)})
        if "{" in req.stmtId or "}" in req.stmtId or not req.stmtId:
            return _error_response(400, "SchemaViolation",
                                   "stmtId must be non-empty and brace-free")
        level = Level.from_name(req.level)
        warnings = [str(w) for w in report.warnings]
        dov = degree_of_variability(tree)
        if req.output == "tree":
            doc = to_tree(filter_level(tree, level),
                          include_annotations=req.includeAnnotations,
                          include_properties=req.includeProperties,
                          conditions_first=req.conditionsFirst)
            output: object = doc.to_dict()
            atom_count = doc.metrics.atom_count
        else:
            result = expand(tree, req.stmtId, level)
            opts = TabularOptions(
                include_headers=req.includeHeaders,
                include_annotations=req.includeAnnotations,
                format=req.output)
            render = to_csv if req.output == "csv" else to_sheets
            output = render(result, opts)
            atom_count = len(result.atoms)
        body: dict = {
            "output": output,
            "atomCount": atom_count,
            "degreeOfVariability": dov,
            "warnings": warnings,
        }
        if req.rawStatement is not None:
            body["rawStatement"] = req.rawStatement
        return JSONResponse(content=body)

    return app


app = create_app()


def main() -> None:
    import uvicorn

    port = int(os.environ.get("PORT", "8000"))
    uvicorn.run(app, host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
