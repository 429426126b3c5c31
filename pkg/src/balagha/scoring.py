"""Density score and per-domain summary for a validated document.

The density numerator is the sum of awarded marks (CG-1 deductions
subtract), the denominator the morpheme count; the quotient is rounded
half-away-from-zero to five decimal places. The summary renders the
domain breakdown over the morpheme count, e.g. "A6 B7 C10 / 39".
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal

from .annotation import ERROR, Diagnostic, Document, validate_document
from .morphology import MANUAL_OVERRIDE, RULE_BASED, Lexicon, count_morphemes
from .taxonomy import Taxonomy

CSV_COLUMNS = ("id", "a_sum", "b_sum", "c_sum", "total", "morphemes", "density")


class ScoringError(Exception):
    pass


class ZeroMorphemes(ScoringError):
    """Effective morpheme count is zero; the density is undefined."""


class ValidationFailed(ScoringError):
    """Scoring refused because the document has error diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        errors = sum(1 for d in diagnostics if d.severity == ERROR)
        super().__init__(f"document has {errors} validation error(s)")


@dataclass(frozen=True)
class ScoreReport:
    total_marks: int
    a_sum: int
    b_sum: int
    c_sum: int
    morpheme_count: int
    morpheme_source: str
    density: Decimal
    summary_text: str
    per_device_tally: dict[str, tuple[int, int]]  # code -> (occurrences, mark sum)

    def to_json_dict(self) -> dict:
        return {
            "total_marks": self.total_marks,
            "domain_sums": {"a": self.a_sum, "b": self.b_sum, "c": self.c_sum},
            "morpheme_count": self.morpheme_count,
            "morpheme_source": self.morpheme_source,
            "density": str(self.density),
            "summary_text": self.summary_text,
            "per_device_tally": {
                code: {"occurrences": occ, "mark_sum": marks}
                for code, (occ, marks) in self.per_device_tally.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, indent=2) + "\n"


def compute_density(total_marks: int, morpheme_count: int) -> Decimal:
    """total/morphemes as an exact ratio, rounded half-away-from-zero to 5 dp."""
    if morpheme_count < 1:
        raise ZeroMorphemes("morpheme count must be >= 1")
    sign = -1 if total_marks < 0 else 1
    scaled = abs(total_marks) * 10**5
    quotient, remainder = divmod(scaled, morpheme_count)
    if 2 * remainder >= morpheme_count:
        quotient += 1
    return (Decimal(sign * quotient) / Decimal(10**5)).quantize(Decimal("0.00001"))


def render_summary(report_or_parts) -> str:
    """"A{a} B{b} C{c} / {m}" with plain decimal integers."""
    if isinstance(report_or_parts, ScoreReport):
        a, b, c, m = (
            report_or_parts.a_sum,
            report_or_parts.b_sum,
            report_or_parts.c_sum,
            report_or_parts.morpheme_count,
        )
    else:
        a, b, c, m = report_or_parts
    return f"A{a} B{b} C{c} / {m}"


def effective_morphemes(doc: Document, lexicon: Lexicon | None = None) -> tuple[int, str]:
    """Manual count when the document carries one, else the rule-based count."""
    if doc.manual_morpheme_count is not None:
        return doc.manual_morpheme_count, MANUAL_OVERRIDE
    return count_morphemes(doc.text, lexicon).total, RULE_BASED


def score_document(
    doc: Document, taxonomy: Taxonomy, lexicon: Lexicon | None = None
) -> ScoreReport:
    """Score a document; raises ValidationFailed / ZeroMorphemes."""
    diagnostics = validate_document(doc, taxonomy)
    if any(d.severity == ERROR for d in diagnostics):
        raise ValidationFailed(diagnostics)

    morphemes, source = effective_morphemes(doc, lexicon)
    if morphemes == 0:
        raise ZeroMorphemes("document has no countable morphemes")

    sums = {"A": 0, "B": 0, "C": 0}
    tally: dict[str, list[int]] = {}
    for ann in doc.annotations:
        device = taxonomy.get(ann.device)
        sums[device.domain] += ann.mark
        entry = tally.setdefault(device.code.render(), [0, 0])
        entry[0] += 1
        entry[1] += ann.mark

    total = sums["A"] + sums["B"] + sums["C"]
    # catalogue order keeps the tally stable under annotation permutation
    ordered = {
        d.code.render(): tuple(tally[d.code.render()])
        for d in taxonomy
        if d.code.render() in tally
    }
    return ScoreReport(
        total_marks=total,
        a_sum=sums["A"],
        b_sum=sums["B"],
        c_sum=sums["C"],
        morpheme_count=morphemes,
        morpheme_source=source,
        density=compute_density(total, morphemes),
        summary_text=render_summary((sums["A"], sums["B"], sums["C"], morphemes)),
        per_device_tally=ordered,
    )


def csv_row(doc_id: str, report: ScoreReport) -> list[str]:
    return [
        doc_id,
        str(report.a_sum),
        str(report.b_sum),
        str(report.c_sum),
        str(report.total_marks),
        str(report.morpheme_count),
        str(report.density),
    ]


def reports_to_csv(rows: list[list[str]]) -> str:
    """One line per document, with the standard column header."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()
