// Thin typed wrapper over the advisor HTTP service. Every call either
// resolves with the parsed payload or throws an ApiRequestError carrying
// the service's error code, so callers never inspect raw responses.

import type { ApiError, Dfd, PatternDetail, Report } from "./types.js";

export class ApiRequestError extends Error {
  readonly code: string;
  readonly status: number;
  readonly detail: unknown;

  constructor(code: string, message: string, status: number, detail?: unknown) {
    super(message);
    this.code = code;
    this.status = status;
    this.detail = detail;
  }
}

export interface QueryResult {
  vars: string[];
  rows: { type: string; value: string }[][];
}

export interface LintFinding {
  pitfall: string;
  severity: string;
  elements: string[];
  message: string;
  foreign: boolean;
}

async function unwrap<T>(resp: Response): Promise<T> {
  if (resp.ok) {
    return (await resp.json()) as T;
  }
  let body: ApiError | null = null;
  try {
    body = (await resp.json()) as ApiError;
  } catch {
    // non-JSON error body; fall through to the generic error below
  }
  if (body && body.error) {
    throw new ApiRequestError(
      body.error.code,
      body.error.message,
      resp.status,
      body.error.detail,
    );
  }
  throw new ApiRequestError("internal", `HTTP ${resp.status}`, resp.status);
}

export class AdvisorClient {
  constructor(private readonly baseUrl: string) {}

  async annotate(dfd: Dfd): Promise<Report> {
    const resp = await fetch(`${this.baseUrl}/annotate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(dfd),
    });
    return unwrap<Report>(resp);
  }

  async query(text: string): Promise<QueryResult> {
    const resp = await fetch(`${this.baseUrl}/query`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ query: text }),
    });
    return unwrap<QueryResult>(resp);
  }

  async patterns(): Promise<PatternDetail[]> {
    return unwrap<PatternDetail[]>(await fetch(`${this.baseUrl}/patterns`));
  }

  async pattern(number: number): Promise<PatternDetail> {
    return unwrap<PatternDetail>(
      await fetch(`${this.baseUrl}/patterns/${number}`),
    );
  }

  async lint(turtle: string): Promise<{ findings: LintFinding[] }> {
    const resp = await fetch(`${this.baseUrl}/lint`, {
      method: "POST",
      headers: { "content-type": "text/turtle" },
      body: turtle,
    });
    return unwrap<{ findings: LintFinding[] }>(resp);
  }
}
