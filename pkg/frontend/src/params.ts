/**
 * Output parameters, persisted across page reloads.
 *
 * Storage is injected so tests can use a plain object; the app passes
 * window.localStorage. Corrupt or stale stored values fall back to the
 * defaults field by field.
 */

import type { LevelName, OutputFormat, ParseParams } from './api.js';

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

export const PARAMS_KEY = 'igscript.params';

export const DEFAULT_PARAMS: ParseParams = {
  output: 'tree',
  stmtId: '1',
  level: 'logico',
  includeHeaders: true,
  includeAnnotations: false,
  includeProperties: true,
  conditionsFirst: false,
};

const OUTPUTS: readonly OutputFormat[] = ['csv', 'sheets', 'tree'];
const LEVELS: readonly LevelName[] = ['core', 'extended', 'logico'];

function pick<T>(value: unknown, allowed: readonly T[], fallback: T): T {
  return allowed.includes(value as T) ? (value as T) : fallback;
}

function asBool(value: unknown, fallback: boolean): boolean {
  return typeof value === 'boolean' ? value : fallback;
}

export function loadParams(storage: StorageLike): ParseParams {
  let raw: unknown = null;
  try {
    const stored = storage.getItem(PARAMS_KEY);
    if (stored !== null) raw = JSON.parse(stored);
  } catch {
    raw = null;
  }
  const d = DEFAULT_PARAMS;
  if (typeof raw !== 'object' || raw === null) return { ...d };
  const r = raw as Record<string, unknown>;
  const stmtId =
    typeof r.stmtId === 'string' && r.stmtId !== '' && !/[{}]/.test(r.stmtId)
      ? r.stmtId
      : d.stmtId;
  return {
    output: pick(r.output, OUTPUTS, d.output),
    stmtId,
    level: pick(r.level, LEVELS, d.level),
    includeHeaders: asBool(r.includeHeaders, d.includeHeaders),
    includeAnnotations: asBool(r.includeAnnotations, d.includeAnnotations),
    includeProperties: asBool(r.includeProperties, d.includeProperties),
    conditionsFirst: asBool(r.conditionsFirst, d.conditionsFirst),
  };
}

export function saveParams(storage: StorageLike, params: ParseParams): void {
  storage.setItem(PARAMS_KEY, JSON.stringify(params));
}
