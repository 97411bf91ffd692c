/**
 * End-to-end loop against a live service. Run with
 *
 *   IGSCRIPT_URL=http://127.0.0.1:8000 vitest run
 *
 * Without the variable the suite is skipped, keeping plain `npm test`
 * self-contained.
 */

import { readFileSync } from 'node:fs';

import { describe, expect, it } from 'vitest';

import {
  Submitter,
  type PositionedIssue,
  type TreeDoc,
} from '../src/api.js';
import { EXAMPLES } from '../src/examples.js';
import { DEFAULT_PARAMS } from '../src/params.js';
import { countNodes, flatten, resetCollapsed } from '../src/tree.js';

const BASE_URL = process.env.IGSCRIPT_URL ?? '';

interface InvalidCase {
  codedStatement: string;
  error: PositionedIssue;
}

const INVALID = JSON.parse(
  readFileSync(new URL('./fixtures/invalidCases.json', import.meta.url),
    'utf-8'),
) as InvalidCase[];

describe.skipIf(!BASE_URL)('live service loop', () => {
  const submitter = new Submitter(BASE_URL);

  it('parses and renders every bundled example', async () => {
    for (const example of EXAMPLES) {
      const result = await submitter.submit({
        ...DEFAULT_PARAMS,
        output: 'tree',
        rawStatement: example.raw,
        codedStatement: example.coded,
      });
      expect(result.status, example.name).toBe('ok');
      if (result.status !== 'ok') continue;
      const doc = result.data.output as TreeDoc;
      const rows = flatten(doc.root, resetCollapsed());
      expect(rows.length, example.name).toBe(countNodes(doc.root));
      expect(result.data.rawStatement).toBe(example.raw);
      expect(result.data.degreeOfVariability).toBeGreaterThanOrEqual(1);
    }
  });

  it('returns tabular previews for the examples', async () => {
    for (const example of EXAMPLES) {
      const result = await submitter.submit({
        ...DEFAULT_PARAMS,
        output: 'csv',
        codedStatement: example.coded,
      });
      expect(result.status, example.name).toBe('ok');
      if (result.status !== 'ok') continue;
      const text = result.data.output as string;
      expect(text.startsWith('Statement ID|'), example.name).toBe(true);
    }
  });

  it('still reports the frozen error spans for the invalid fixtures', async () => {
    for (const c of INVALID) {
      const result = await submitter.submit({
        ...DEFAULT_PARAMS,
        codedStatement: c.codedStatement,
      });
      expect(result.status).toBe('invalid');
      if (result.status !== 'invalid') continue;
      expect(result.error).toEqual(c.error);
    }
  });
});
