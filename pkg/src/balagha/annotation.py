"""Document model and the standoff annotation file format.

Documents are UTF-8 JSON files (extension `.balagha.json`) holding the
source text, metadata, an optional manual morpheme count, and standoff
annotations addressed by Unicode scalar offsets so that overlapping
device marks nest freely. Serialization is canonical: fixed field
order, metadata keys sorted, annotations in list order, so equal
documents always produce identical bytes.

Device codes are kept as their canonical strings here; resolving them
against the catalogue is the validator's job, which is what lets a file
with an unknown code parse cleanly and then fail validation with a
diagnostic instead of an exception.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .taxonomy import Taxonomy, UnknownDevice

ERROR = "error"
WARNING = "warning"

_DOCUMENT_FIELDS = {"id", "metadata", "text", "manual_morpheme_count", "annotations"}
_ANNOTATION_FIELDS = {"device", "start", "end", "mark", "note"}


class DocumentError(Exception):
    """Base class for document I/O errors."""


class EncodingError(DocumentError):
    """Content is not valid UTF-8."""


class FormatError(DocumentError):
    """Content is structurally malformed; `where` locates the problem."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(message if where is None else f"{message} ({where})")


@dataclass(frozen=True)
class Annotation:
    device: str
    start: int
    end: int
    mark: int
    note: str | None = None


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    location: tuple[int, tuple[int, int]] | None = None

    def to_json_dict(self) -> dict:
        loc = None
        if self.location is not None:
            index, (start, end) = self.location
            loc = {"annotation_index": index, "start": start, "end": end}
        return {
            "severity": self.severity,
            "code": self.code,
            "message": self.message,
            "location": loc,
        }


@dataclass
class Document:
    id: str
    metadata: dict[str, str] = field(default_factory=dict)
    text: str = ""
    manual_morpheme_count: int | None = None
    annotations: list[Annotation] = field(default_factory=list)


def _require(cond: bool, message: str, where: str):
    if not cond:
        raise FormatError(message, where)


def _parse_annotation(obj, index: int) -> Annotation:
    where = f"annotations[{index}]"
    _require(isinstance(obj, dict), "annotation must be an object", where)
    unknown = set(obj) - _ANNOTATION_FIELDS
    if unknown:
        raise FormatError(f"unknown field {sorted(unknown)[0]!r}", where)
    for key in ("device", "start", "end", "mark"):
        _require(key in obj, f"missing field {key!r}", where)
    device = obj["device"]
    _require(isinstance(device, str) and device != "", "field 'device' must be a non-empty string", where)
    for key in ("start", "end"):
        value = obj[key]
        _require(
            isinstance(value, int) and not isinstance(value, bool) and value >= 0,
            f"field {key!r} must be a non-negative integer",
            where,
        )
    mark = obj["mark"]
    _require(
        isinstance(mark, int) and not isinstance(mark, bool),
        "field 'mark' must be an integer",
        where,
    )
    note = obj.get("note")
    _require(note is None or isinstance(note, str), "field 'note' must be a string", where)
    return Annotation(device, obj["start"], obj["end"], mark, note)


def parse_document(content: bytes) -> Document:
    """Parse document bytes; structural problems raise FormatError."""
    try:
        text = content.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"not valid UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"invalid JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}"
        ) from None

    _require(isinstance(obj, dict), "top level must be an object", "document")
    unknown = set(obj) - _DOCUMENT_FIELDS
    if unknown:
        raise FormatError(f"unknown field {sorted(unknown)[0]!r}", "document")
    for key in ("id", "metadata", "text", "annotations"):
        _require(key in obj, f"missing field {key!r}", "document")
    _require(isinstance(obj["id"], str), "field 'id' must be a string", "document")
    _require(isinstance(obj["text"], str), "field 'text' must be a string", "document")
    meta = obj["metadata"]
    _require(isinstance(meta, dict), "field 'metadata' must be an object", "document")
    for k, v in meta.items():
        _require(isinstance(v, str), f"metadata value for {k!r} must be a string", "metadata")
    manual = obj.get("manual_morpheme_count")
    _require(
        manual is None
        or (isinstance(manual, int) and not isinstance(manual, bool) and manual >= 1),
        "field 'manual_morpheme_count' must be a positive integer",
        "document",
    )
    raw_annotations = obj["annotations"]
    _require(isinstance(raw_annotations, list), "field 'annotations' must be an array", "document")
    annotations = [_parse_annotation(a, i) for i, a in enumerate(raw_annotations)]
    return Document(
        id=obj["id"],
        metadata=dict(meta),
        text=obj["text"],
        manual_morpheme_count=manual,
        annotations=annotations,
    )


def serialize_document(doc: Document) -> bytes:
    """Canonical bytes for a document; parse(serialize(doc)) == doc."""
    out: dict = {
        "id": doc.id,
        "metadata": {k: doc.metadata[k] for k in sorted(doc.metadata)},
        "text": doc.text,
    }
    if doc.manual_morpheme_count is not None:
        out["manual_morpheme_count"] = doc.manual_morpheme_count
    out["annotations"] = [
        {
            "device": a.device,
            "start": a.start,
            "end": a.end,
            "mark": a.mark,
            **({"note": a.note} if a.note is not None else {}),
        }
        for a in doc.annotations
    ]
    return (json.dumps(out, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def validate_document(doc: Document, taxonomy: Taxonomy) -> list[Diagnostic]:
    """Check annotations against the catalogue and the text bounds.

    Errors block scoring; warnings flag legal-but-suspect patterns:
    repeated figurative (domain B) marks on one span, inert zero marks,
    and CG-1 marks other than 0/-1.
    """
    diagnostics: list[Diagnostic] = []
    text_len = len(doc.text)
    b_spans: dict[tuple[int, int], list[int]] = {}

    for i, ann in enumerate(doc.annotations):
        loc = (i, (ann.start, ann.end))
        try:
            device = taxonomy.get(ann.device)
        except UnknownDevice:
            diagnostics.append(
                Diagnostic(ERROR, "unknown-device", f"unknown device code {ann.device!r}", loc)
            )
            continue
        if ann.mark not in device.allowed_marks:
            allowed = sorted(device.allowed_marks)
            diagnostics.append(
                Diagnostic(
                    ERROR,
                    "mark-not-allowed",
                    f"mark {ann.mark} outside {allowed} for {ann.device}",
                    loc,
                )
            )
        if ann.start > ann.end or ann.end > text_len:
            diagnostics.append(
                Diagnostic(
                    ERROR,
                    "span-out-of-bounds",
                    f"span {ann.start}..{ann.end} outside text of length {text_len}",
                    loc,
                )
            )
        if ann.mark == 0:
            diagnostics.append(
                Diagnostic(
                    WARNING,
                    "zero-mark",
                    f"mark 0 on {ann.device} contributes nothing to the score",
                    loc,
                )
            )
        if ann.device == "CG-1" and ann.mark not in (0, -1):
            diagnostics.append(
                Diagnostic(
                    WARNING,
                    "cg1-mark",
                    "CG-1 records deductions; each occurrence should carry 0 or -1",
                    loc,
                )
            )
        if device.domain == "B":
            b_spans.setdefault((ann.start, ann.end), []).append(i)

    for span, indexes in b_spans.items():
        if len(indexes) > 1:
            codes = ", ".join(doc.annotations[i].device for i in indexes)
            diagnostics.append(
                Diagnostic(
                    WARNING,
                    "figurative-span-repeat",
                    f"figurative speech scored more than once on one span ({codes})",
                    (indexes[1], span),
                )
            )

    return diagnostics
