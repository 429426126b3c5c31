// Wire types for the scoring service; shapes mirror its JSON exactly.

export interface Device {
  code: string;
  name_en: string;
  name_ar: string;
  domain: "A" | "B" | "C";
  part: string | null;
  allowed_marks: number[];
  multiplicity_note: string | null;
  definition_summary: string;
  deep_link_slug: string;
}

export interface AnnotationRecord {
  device: string;
  start: number;
  end: number;
  mark: number;
  note?: string;
}

export interface BalaghaDocument {
  id: string;
  metadata: Record<string, string>;
  text: string;
  manual_morpheme_count?: number;
  annotations: AnnotationRecord[];
}

export interface Diagnostic {
  severity: "error" | "warning";
  code: string;
  message: string;
  location: { annotation_index: number; start: number; end: number } | null;
}

export interface ScoreResponse {
  total_marks: number;
  domain_sums: { a: number; b: number; c: number };
  morpheme_count: number;
  morpheme_source: string;
  density: string;
  summary_text: string;
  per_device_tally: Record<string, { occurrences: number; mark_sum: number }>;
  warnings: Diagnostic[];
}

export interface MorphemeSegment {
  text: string;
  kind: string;
  counted: boolean;
}

export interface MorphemeBreakdown {
  token: string;
  start: number;
  end: number;
  kind: string;
  segments: MorphemeSegment[];
  token_count: number;
}

export interface MorphemeResponse {
  total: number;
  source: string;
  breakdowns: MorphemeBreakdown[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  diagnostics?: Diagnostic[];
}
