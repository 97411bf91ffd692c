/**
 * Client for the parsing service.
 *
 * All computation happens server-side; this module only ships request
 * bodies to POST /v1/parse and classifies what comes back. At most one
 * request is in flight: a later submission aborts the earlier one.
 */

export type OutputFormat = 'csv' | 'sheets' | 'tree';
export type LevelName = 'core' | 'extended' | 'logico';

export interface ParseParams {
  output: OutputFormat;
  stmtId: string;
  level: LevelName;
  includeHeaders: boolean;
  includeAnnotations: boolean;
  includeProperties: boolean;
  conditionsFirst: boolean;
}

export interface ParseRequestBody extends ParseParams {
  codedStatement: string;
  rawStatement?: string;
}

export interface PositionedIssue {
  kind: string;
  message: string;
  position: number;
  length: number;
}

export interface TreeNode {
  label: string;
  symbol?: string;
  annotation?: string;
  operator?: string;
  children: TreeNode[];
  properties: TreeNode[];
}

export interface TreeMetrics {
  degreeOfVariability: number;
  atomCount: number;
  maxNestingDepth: number;
}

export interface TreeDoc {
  version: number;
  root: TreeNode;
  metrics: TreeMetrics;
  canvas: { width: number; height: number };
}

export interface ParseSuccess {
  output: string | TreeDoc;
  atomCount: number;
  degreeOfVariability: number;
  warnings: string[];
  rawStatement?: string;
}

export type SubmitResult =
  | { status: 'ok'; data: ParseSuccess }
  | { status: 'invalid'; error: PositionedIssue }
  | { status: 'unavailable'; message: string }
  | { status: 'cancelled' };

export type FetchLike = (
  url: string,
  init: RequestInit,
) => Promise<Response>;

function isAbort(err: unknown): boolean {
  return err instanceof Error && err.name === 'AbortError';
}

export async function parseStatement(
  baseUrl: string,
  body: ParseRequestBody,
  fetchFn: FetchLike,
  signal?: AbortSignal,
): Promise<SubmitResult> {
  let resp: Response;
  try {
    resp = await fetchFn(`${baseUrl}/v1/parse`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
      signal,
    });
  } catch (err) {
    if (isAbort(err)) return { status: 'cancelled' };
    return { status: 'unavailable', message: String(err) };
  }
  if (resp.status === 200) {
    return { status: 'ok', data: (await resp.json()) as ParseSuccess };
  }
  if (resp.status === 400) {
    try {
      const payload = (await resp.json()) as { error: PositionedIssue };
      return { status: 'invalid', error: payload.error };
    } catch {
      return { status: 'unavailable', message: 'malformed error response' };
    }
  }
  return {
    status: 'unavailable',
    message: `service responded with status ${resp.status}`,
  };
}

/** Serializes submissions: starting a new one cancels the previous. */
export class Submitter {
  private controller: AbortController | null = null;

  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async submit(body: ParseRequestBody): Promise<SubmitResult> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      return await parseStatement(
        this.baseUrl,
        body,
        this.fetchFn,
        controller.signal,
      );
    } finally {
      if (this.controller === controller) this.controller = null;
    }
  }
}
