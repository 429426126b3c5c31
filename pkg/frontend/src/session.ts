// Scoring-session state and its mapping to the document format.
//
// Two entry modes share one serialization: quick tallies become
// zero-width annotations anchored at the start of the text, span mode
// keeps the offsets the assessor entered. The session never computes a
// density itself; the displayed report is whatever the service said.

import type { AnnotationRecord, BalaghaDocument, ScoreResponse } from "./types.js";

export type EntryMode = "tally" | "span";

export interface SpanEntry {
  device: string;
  start: number;
  end: number;
  mark: number;
  note?: string;
}

export interface ScoringSession {
  mode: EntryMode;
  documentId: string;
  metadata: Record<string, string>;
  text: string;
  /** tally mode: marks per occurrence, keyed by device code */
  tallies: Map<string, number[]>;
  /** span mode: explicit annotations */
  spans: SpanEntry[];
  manualMorphemes: number | null;
  fetchedMorphemes: number | null;
}

export function newSession(): ScoringSession {
  return {
    mode: "tally",
    documentId: "session",
    metadata: {},
    text: "",
    tallies: new Map(),
    spans: [],
    manualMorphemes: null,
    fetchedMorphemes: null,
  };
}

export function addOccurrence(
  session: ScoringSession,
  device: string,
  mark: number,
): void {
  const marks = session.tallies.get(device) ?? [];
  marks.push(mark);
  session.tallies.set(device, marks);
}

export function setOccurrenceMark(
  session: ScoringSession,
  device: string,
  index: number,
  mark: number,
): void {
  const marks = session.tallies.get(device);
  if (marks && index >= 0 && index < marks.length) marks[index] = mark;
}

export function removeOccurrence(
  session: ScoringSession,
  device: string,
  index: number,
): void {
  const marks = session.tallies.get(device);
  if (!marks) return;
  marks.splice(index, 1);
  if (marks.length === 0) session.tallies.delete(device);
}

/** Manual entry wins over the fetched rule-based count when present. */
export function effectiveMorphemes(session: ScoringSession): number | null {
  return session.manualMorphemes ?? session.fetchedMorphemes;
}

export function sessionToDocument(session: ScoringSession): BalaghaDocument {
  const annotations: AnnotationRecord[] = [];
  if (session.mode === "tally") {
    for (const [device, marks] of session.tallies) {
      for (const mark of marks) {
        annotations.push({ device, start: 0, end: 0, mark });
      }
    }
  } else {
    for (const entry of session.spans) {
      annotations.push({
        device: entry.device,
        start: entry.start,
        end: entry.end,
        mark: entry.mark,
        ...(entry.note ? { note: entry.note } : {}),
      });
    }
  }
  const doc: BalaghaDocument = {
    id: session.documentId,
    metadata: { ...session.metadata },
    text: session.text,
    annotations,
  };
  const morphemes = effectiveMorphemes(session);
  if (morphemes !== null && morphemes > 0) {
    doc.manual_morpheme_count = morphemes;
  }
  return doc;
}

export function documentToSession(doc: BalaghaDocument): ScoringSession {
  const session = newSession();
  session.documentId = doc.id;
  session.metadata = { ...doc.metadata };
  session.text = doc.text;
  session.manualMorphemes = doc.manual_morpheme_count ?? null;
  const allZeroWidth = doc.annotations.every((a) => a.start === 0 && a.end === 0);
  if (allZeroWidth) {
    session.mode = "tally";
    for (const a of doc.annotations) addOccurrence(session, a.device, a.mark);
  } else {
    session.mode = "span";
    session.spans = doc.annotations.map((a) => ({
      device: a.device,
      start: a.start,
      end: a.end,
      mark: a.mark,
      ...(a.note ? { note: a.note } : {}),
    }));
  }
  return session;
}

export function exportDocumentJson(session: ScoringSession): string {
  return JSON.stringify(sessionToDocument(session), null, 2) + "\n";
}

/**
 * The strings the report view shows, taken verbatim from the service
 * response; the client adds layout, never arithmetic.
 */
export interface ReportDisplay {
  density: string;
  summaryText: string;
  domainSums: { a: number; b: number; c: number };
  morphemes: number;
  morphemeSource: string;
}

export function toDisplay(response: ScoreResponse): ReportDisplay {
  return {
    density: response.density,
    summaryText: response.summary_text,
    domainSums: response.domain_sums,
    morphemes: response.morpheme_count,
    morphemeSource: response.morpheme_source,
  };
}
