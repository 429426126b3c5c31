"""Stateless HTTP interface for the toolkit.

Documents travel in the request body; nothing is persisted. The same
core functions back the CLI, so a document scored over HTTP and on the
command line produces identical reports.

Error statuses: 400 malformed body, 404 unknown device, 422 document
validation failure (with diagnostics), 500 internal.
"""
from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, JSONResponse
from pydantic import BaseModel, Field

from . import scoring
from .annotation import ERROR, Annotation, Document, validate_document
from .morphology import count_morphemes
from .taxonomy import UnknownDevice, load_taxonomy


class AnnotationIn(BaseModel):
    device: str
    start: int = Field(ge=0)
    end: int = Field(ge=0)
    mark: int
    note: str | None = None


class DocumentIn(BaseModel):
    id: str = "session"
    metadata: dict[str, str] = Field(default_factory=dict)
    text: str
    manual_morpheme_count: int | None = Field(default=None, ge=1)
    annotations: list[AnnotationIn] = Field(default_factory=list)


class MorphemeTextIn(BaseModel):
    text: str


def _to_document(payload: DocumentIn) -> Document:
    return Document(
        id=payload.id,
        metadata=dict(payload.metadata),
        text=payload.text,
        manual_morpheme_count=payload.manual_morpheme_count,
        annotations=[
            Annotation(a.device, a.start, a.end, a.mark, a.note)
            for a in payload.annotations
        ],
    )


def _error(status: int, code: str, message: str, diagnostics=None) -> JSONResponse:
    body = {"status": status, "code": code, "message": message}
    if diagnostics is not None:
        body["diagnostics"] = [d.to_json_dict() for d in diagnostics]
    return JSONResponse(status_code=status, content=body)


def create_app(frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="balagha", version="0.1.0")
    taxonomy = load_taxonomy()

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request, exc):
        return _error(400, "malformed-body", str(exc.errors()[:1]))

    @app.exception_handler(Exception)
    async def internal_error(request, exc):
        return _error(500, "internal-error", "internal error")

    @app.get("/api/taxonomy")
    def get_taxonomy():
        return [d.to_json_dict() for d in taxonomy]

    @app.get("/api/device/{code}")
    def get_device(code: str):
        try:
            return taxonomy.get(code).to_json_dict()
        except UnknownDevice:
            return _error(404, "unknown-device", f"unknown device code {code!r}")

    @app.post("/api/morphemes")
    def morphemes(payload: MorphemeTextIn):
        count = count_morphemes(payload.text)
        return {
            "total": count.total,
            "source": count.source,
            "breakdowns": [
                {
                    "token": b.token.surface,
                    "start": b.token.start,
                    "end": b.token.end,
                    "kind": b.token.kind,
                    "segments": [
                        {"text": s.text, "kind": s.kind, "counted": s.counted}
                        for s in b.segments
                    ],
                    "token_count": b.token_count,
                }
                for b in count.breakdowns
            ],
        }

    @app.post("/api/validate")
    def validate(payload: DocumentIn):
        diagnostics = validate_document(_to_document(payload), taxonomy)
        return {"diagnostics": [d.to_json_dict() for d in diagnostics]}

    @app.post("/api/score")
    def score(payload: DocumentIn):
        doc = _to_document(payload)
        try:
            report = scoring.score_document(doc, taxonomy)
        except scoring.ValidationFailed as exc:
            return _error(
                422, "validation-failed", str(exc), diagnostics=exc.diagnostics
            )
        except scoring.ZeroMorphemes:
            return _error(
                422, "zero-morphemes", "effective morpheme count is zero"
            )
        warnings = [
            d for d in validate_document(doc, taxonomy) if d.severity != ERROR
        ]
        body = report.to_json_dict()
        body["warnings"] = [d.to_json_dict() for d in warnings]
        return body

    _mount_frontend(app, frontend_dir)
    return app


def _mount_frontend(app: FastAPI, frontend_dir: str | Path | None):
    """Serve the built assessor UI when its dist directory exists."""
    if frontend_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    else:
        candidate = Path(frontend_dir)
    index = candidate / "index.html"
    if not index.is_file():
        return

    @app.get("/device/{slug}")
    def device_page(slug: str):
        return FileResponse(index)

    @app.get("/")
    def index_page():
        return FileResponse(index)

    from fastapi.staticfiles import StaticFiles

    app.mount("/", StaticFiles(directory=candidate), name="ui")


def serve_api(port: int, host: str = "127.0.0.1"):
    """Run the service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)


app = create_app()
