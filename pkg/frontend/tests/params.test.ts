import { describe, expect, it } from 'vitest';

import {
  DEFAULT_PARAMS,
  PARAMS_KEY,
  loadParams,
  saveParams,
  type StorageLike,
} from '../src/params.js';

function fakeStorage(): StorageLike & { data: Map<string, string> } {
  const data = new Map<string, string>();
  return {
    data,
    getItem: (key) => data.get(key) ?? null,
    setItem: (key, value) => void data.set(key, value),
  };
}

describe('parameter persistence', () => {
  it('returns defaults for a fresh storage', () => {
    expect(loadParams(fakeStorage())).toEqual(DEFAULT_PARAMS);
  });

  it('round-trips a full parameter set', () => {
    const storage = fakeStorage();
    const params = {
      ...DEFAULT_PARAMS,
      output: 'sheets' as const,
      level: 'core' as const,
      stmtId: '650',
      includeAnnotations: true,
      includeHeaders: false,
    };
    saveParams(storage, params);
    expect(loadParams(storage)).toEqual(params);
    expect(storage.data.has(PARAMS_KEY)).toBe(true);
  });

  it('survives a simulated reload', () => {
    // same backing data, new load call: what the browser does on F5
    const storage = fakeStorage();
    saveParams(storage, { ...DEFAULT_PARAMS, conditionsFirst: true });
    const reloaded = loadParams({
      getItem: (key) => storage.data.get(key) ?? null,
      setItem: () => undefined,
    });
    expect(reloaded.conditionsFirst).toBe(true);
  });

  it('falls back to defaults on corrupt JSON', () => {
    const storage = fakeStorage();
    storage.data.set(PARAMS_KEY, '{not json');
    expect(loadParams(storage)).toEqual(DEFAULT_PARAMS);
  });

  it('repairs invalid fields without losing valid ones', () => {
    const storage = fakeStorage();
    storage.data.set(
      PARAMS_KEY,
      JSON.stringify({
        output: 'pdf',
        level: 'extended',
        stmtId: '{9}',
        includeHeaders: 'yes',
        includeAnnotations: true,
      }),
    );
    const loaded = loadParams(storage);
    expect(loaded.output).toBe(DEFAULT_PARAMS.output);
    expect(loaded.level).toBe('extended');
    expect(loaded.stmtId).toBe(DEFAULT_PARAMS.stmtId);
    expect(loaded.includeHeaders).toBe(DEFAULT_PARAMS.includeHeaders);
    expect(loaded.includeAnnotations).toBe(true);
  });

  it('ignores a stored non-object', () => {
    const storage = fakeStorage();
    storage.data.set(PARAMS_KEY, '"tree"');
    expect(loadParams(storage)).toEqual(DEFAULT_PARAMS);
  });
});
