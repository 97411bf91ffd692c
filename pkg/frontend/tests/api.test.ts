import { describe, expect, it } from 'vitest';

import {
  Submitter,
  parseStatement,
  type FetchLike,
  type ParseRequestBody,
} from '../src/api.js';

const BODY: ParseRequestBody = {
  codedStatement: 'A(farmer) D(must) I(submit)',
  output: 'csv',
  stmtId: '1',
  level: 'logico',
  includeHeaders: true,
  includeAnnotations: false,
  includeProperties: true,
  conditionsFirst: false,
};

function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

describe('parseStatement', () => {
  it('posts the body to /v1/parse and returns the payload', async () => {
    let seenUrl = '';
    let seenBody = '';
    const fetchFn: FetchLike = async (url, init) => {
      seenUrl = url;
      seenBody = String(init.body);
      expect(init.method).toBe('POST');
      return jsonResponse(200, {
        output: 'Statement ID|...',
        atomCount: 1,
        degreeOfVariability: 1,
        warnings: [],
      });
    };
    const result = await parseStatement('http://svc:8000', BODY, fetchFn);
    expect(seenUrl).toBe('http://svc:8000/v1/parse');
    expect(JSON.parse(seenBody)).toEqual(BODY);
    expect(result.status).toBe('ok');
    if (result.status === 'ok') {
      expect(result.data.atomCount).toBe(1);
    }
  });

  it('classifies a 400 as an invalid statement', async () => {
    const error = {
      kind: 'UnbalancedBracket',
      message: "unclosed '('",
      position: 1,
      length: 1,
    };
    const fetchFn: FetchLike = async () => jsonResponse(400, { error });
    const result = await parseStatement('', BODY, fetchFn);
    expect(result).toEqual({ status: 'invalid', error });
  });

  it('classifies other statuses as service unavailability', async () => {
    const fetchFn: FetchLike = async () => jsonResponse(500, {});
    const result = await parseStatement('', BODY, fetchFn);
    expect(result.status).toBe('unavailable');
  });

  it('classifies a network failure as unavailability', async () => {
    const fetchFn: FetchLike = async () => {
      throw new TypeError('fetch failed');
    };
    const result = await parseStatement('', BODY, fetchFn);
    expect(result.status).toBe('unavailable');
    if (result.status === 'unavailable') {
      expect(result.message).toContain('fetch failed');
    }
  });
});

describe('Submitter', () => {
  it('aborts the in-flight request when a new one starts', async () => {
    const signals: AbortSignal[] = [];
    let calls = 0;
    const fetchFn: FetchLike = (_url, init) => {
      const signal = init.signal!;
      signals.push(signal);
      calls += 1;
      if (calls === 1) {
        // first request hangs until aborted
        return new Promise<Response>((_resolve, reject) => {
          signal.addEventListener('abort', () =>
            reject(new DOMException('aborted', 'AbortError')),
          );
        });
      }
      return Promise.resolve(
        jsonResponse(200, {
          output: 'row',
          atomCount: 1,
          degreeOfVariability: 1,
          warnings: [],
        }),
      );
    };

    const submitter = new Submitter('', fetchFn);
    const first = submitter.submit(BODY);
    const second = submitter.submit(BODY);
    expect(await first).toEqual({ status: 'cancelled' });
    expect((await second).status).toBe('ok');
    expect(signals[0]!.aborted).toBe(true);
    expect(signals[1]!.aborted).toBe(false);
  });

  it('resolves sequential submissions independently', async () => {
    let calls = 0;
    const fetchFn: FetchLike = async () => {
      calls += 1;
      return jsonResponse(200, {
        output: `row ${calls}`,
        atomCount: calls,
        degreeOfVariability: 1,
        warnings: [],
      });
    };
    const submitter = new Submitter('', fetchFn);
    const first = await submitter.submit(BODY);
    const second = await submitter.submit(BODY);
    expect(first.status).toBe('ok');
    expect(second.status).toBe('ok');
    if (second.status === 'ok') {
      expect(second.data.atomCount).toBe(2);
    }
  });
});
