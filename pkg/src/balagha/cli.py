"""Command-line front end.

Subcommands: score, validate, morphemes, taxonomy, simulate, batch,
serve. Exit codes: 0 success, 1 validation errors, 2 usage error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import concordance, scoring
from .annotation import ERROR, DocumentError, parse_document, validate_document
from .morphology import Lexicon, count_morphemes, default_lexicon
from .taxonomy import (
    InvalidFilter,
    UnknownDevice,
    export_taxonomy_json,
    load_taxonomy,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULT_PORT_ENV = "BALAGHA_PORT"
DOCUMENT_SUFFIX = ".balagha.json"


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def _load_document(path: str):
    content = _read_bytes(path)
    try:
        return parse_document(content)
    except DocumentError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _print_diagnostics(diagnostics, stream=None):
    stream = stream if stream is not None else sys.stdout
    for d in diagnostics:
        where = ""
        if d.location is not None:
            index, (start, end) = d.location
            where = f" [annotation {index}, span {start}..{end}]"
        print(f"{d.severity}: {d.code}: {d.message}{where}", file=stream)


def _report_table(doc_id: str, report: scoring.ScoreReport) -> str:
    lines = [
        f"document        {doc_id}",
        f"domain A        {report.a_sum}",
        f"domain B        {report.b_sum}",
        f"domain C        {report.c_sum}",
        f"total marks     {report.total_marks}",
        f"morphemes       {report.morpheme_count} ({report.morpheme_source})",
        f"density         {report.density}",
        f"summary         {report.summary_text}",
    ]
    if report.per_device_tally:
        lines.append("devices:")
        for code, (occurrences, mark_sum) in report.per_device_tally.items():
            lines.append(f"  {code:<6} x{occurrences}  marks {mark_sum}")
    return "\n".join(lines)


def cmd_score(args) -> int:
    doc = _load_document(args.file)
    taxonomy = load_taxonomy()
    try:
        report = scoring.score_document(doc, taxonomy)
    except scoring.ValidationFailed as exc:
        _print_diagnostics(exc.diagnostics, stream=sys.stderr)
        return EXIT_VALIDATION
    except scoring.ZeroMorphemes:
        print("error: effective morpheme count is zero", file=sys.stderr)
        return EXIT_VALIDATION

    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "csv":
        rows = [scoring.csv_row(doc.id, report)]
        sys.stdout.write(scoring.reports_to_csv(rows))
    else:
        print(_report_table(doc.id, report))
        warnings = [
            d for d in validate_document(doc, taxonomy) if d.severity != ERROR
        ]
        if warnings:
            _print_diagnostics(warnings, stream=sys.stderr)
    return EXIT_OK


def cmd_validate(args) -> int:
    doc = _load_document(args.file)
    diagnostics = validate_document(doc, load_taxonomy())
    _print_diagnostics(diagnostics)
    if not diagnostics:
        print("ok: no diagnostics")
    has_errors = any(d.severity == ERROR for d in diagnostics)
    return EXIT_VALIDATION if has_errors else EXIT_OK


def cmd_morphemes(args) -> int:
    if args.text is not None:
        text = args.text
    else:
        if args.file is None:
            print("error: give a FILE or --text", file=sys.stderr)
            return EXIT_USAGE
        if args.file.endswith(DOCUMENT_SUFFIX):
            text = _load_document(args.file).text
        else:
            try:
                text = Path(args.file).read_text(encoding="utf-8")
            except OSError as exc:
                print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
                return EXIT_IO

    lexicon = default_lexicon()
    if args.lexicon:
        try:
            lexicon = lexicon.merged_with(Lexicon.from_file(args.lexicon))
        except OSError as exc:
            print(f"error: cannot read {args.lexicon}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO

    count = count_morphemes(text, lexicon)
    for b in count.breakdowns:
        rendered = " + ".join(
            f"{s.text}[{s.kind}{'' if s.counted else ', not counted'}]"
            for s in b.segments
        )
        print(f"{b.token.surface:<20} {b.token_count}  {rendered}")
    print(f"total morphemes: {count.total}")
    return EXIT_OK


def cmd_taxonomy(args) -> int:
    if args.action == "export":
        payload = export_taxonomy_json()
        if args.output:
            Path(args.output).write_text(payload, encoding="utf-8")
        else:
            sys.stdout.write(payload)
        return EXIT_OK

    try:
        devices = load_taxonomy().list(args.domain, args.part)
    except InvalidFilter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for d in devices:
        marks = "/".join(str(m) for m in sorted(d.allowed_marks))
        print(f"{d.code.render():<6} {marks:<7} {d.name_en}  ({d.name_ar})")
    return EXIT_OK


def cmd_simulate(args) -> int:
    try:
        counts = tuple(int(c) for c in args.counts.split(","))
    except ValueError:
        print("error: --counts must be comma-separated integers", file=sys.stderr)
        return EXIT_USAGE
    config = concordance.SimulationConfig(
        true_ld_counts=counts,
        assessor_count=args.assessors,
        max_mark=args.max_mark,
        generosity_spread=args.spread,
        seed=args.seed,
    )
    try:
        result = concordance.simulate(config)
    except concordance.InvalidConfig as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    header = "assessor  generosity" + "".join(
        f"  text{i + 1}" for i in range(len(counts))
    )
    print(header)
    for i, (g, row) in enumerate(zip(result.generosities, result.scores), start=1):
        cells = "".join(f"  {score:>5}" for score in row)
        print(f"{i:>8}  {g:>10.3f}{cells}")
    for i, j, report in result.pair_reports:
        (lo1, hi1, mean1), (lo2, hi2, mean2) = report.per_text_ranges
        print(
            f"texts {i + 1}/{j + 1}: ranges [{lo1:g}, {hi1:g}] (mean {mean1:.1f})"
            f" vs [{lo2:g}, {hi2:g}] (mean {mean2:.1f});"
            f" overlap {report.overlap_length:g}"
            f" (fraction {report.overlap_fraction:.3f});"
            f" {'separable' if report.separable else 'not separable'}"
        )

    if args.csv:
        lines = ["assessor,generosity," + ",".join(f"text{i+1}" for i in range(len(counts)))]
        for i, (g, row) in enumerate(zip(result.generosities, result.scores), start=1):
            lines.append(f"{i},{g:.6f}," + ",".join(str(s) for s in row))
        Path(args.csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_batch(args) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        print(f"error: {args.directory} is not a directory", file=sys.stderr)
        return EXIT_IO
    taxonomy = load_taxonomy()
    rows = []
    for path in sorted(root.rglob(f"*{DOCUMENT_SUFFIX}")):
        try:
            doc = parse_document(path.read_bytes())
        except (OSError, DocumentError) as exc:
            print(f"skipped {path}: {exc}", file=sys.stderr)
            continue
        try:
            report = scoring.score_document(doc, taxonomy)
        except scoring.ScoringError as exc:
            print(f"unscoreable {path}: {exc}", file=sys.stderr)
            rows.append([doc.id, "", "", "", "", "", ""])
            continue
        rows.append(scoring.csv_row(doc.id, report))

    payload = scoring.reports_to_csv(rows)
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_serve(args) -> int:
    from .api import serve_api

    serve_api(port=args.port, host=args.host)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balagha",
        description="Literary-device density scoring for Arabic texts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score a document file")
    p.add_argument("file")
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("validate", help="validate a document file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("morphemes", help="morpheme breakdown for a text")
    p.add_argument("file", nargs="?")
    p.add_argument("--text")
    p.add_argument("--lexicon", help="extra exception-lexicon file")
    p.set_defaults(func=cmd_morphemes)

    p = sub.add_parser("taxonomy", help="list or export the device catalogue")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("--domain", choices=("A", "B", "C"))
    p.add_argument("--part", choices=tuple("ABCDEFG"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_taxonomy)

    p = sub.add_parser("simulate", help="assessor-spread simulation")
    p.add_argument("--counts", default="10,5", help="true device counts per text")
    p.add_argument("--assessors", type=int, default=10)
    p.add_argument("--max-mark", type=int, choices=(2, 10), default=2)
    p.add_argument("--spread", type=float, default=0.6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="also write the score matrix as CSV")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("batch", help="score every document under a directory")
    p.add_argument("directory")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get(DEFAULT_PORT_ENV, "8000")),
    )
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownDevice as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
