// Thin fetch client; every number shown in the UI originates here.

import type {
  ApiErrorBody,
  BalaghaDocument,
  Device,
  Diagnostic,
  MorphemeResponse,
  ScoreResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly diagnostics: Diagnostic[] = [],
  ) {
    super(`${status} ${code}`);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(path, init);
  if (!resp.ok) {
    let body: Partial<ApiErrorBody> = {};
    try {
      body = await resp.json();
    } catch {
      // non-JSON error body; fall through with defaults
    }
    throw new ApiError(
      resp.status,
      body.code ?? "request-failed",
      body.diagnostics ?? [],
    );
  }
  return resp.json() as Promise<T>;
}

function post(payload: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  };
}

export function getTaxonomy(): Promise<Device[]> {
  return request<Device[]>("/api/taxonomy");
}

export function getDevice(code: string): Promise<Device> {
  return request<Device>(`/api/device/${encodeURIComponent(code)}`);
}

export function scoreDocument(doc: BalaghaDocument): Promise<ScoreResponse> {
  return request<ScoreResponse>("/api/score", post(doc));
}

export function validateDocument(
  doc: BalaghaDocument,
): Promise<{ diagnostics: Diagnostic[] }> {
  return request("/api/validate", post(doc));
}

export function countMorphemes(text: string): Promise<MorphemeResponse> {
  return request("/api/morphemes", post({ text }));
}
