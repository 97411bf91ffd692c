/**
 * Slice editor text around a service-reported issue span, so the view
 * can wrap the offending characters without touching the text itself.
 */

export interface SpanParts {
  before: string;
  span: string;
  after: string;
}

export function splitAtSpan(
  text: string,
  position: number,
  length: number,
): SpanParts {
  const start = Math.max(0, Math.min(position, text.length));
  const end = Math.max(start, Math.min(start + Math.max(length, 0), text.length));
  return {
    before: text.slice(0, start),
    span: text.slice(start, end),
    after: text.slice(end),
  };
}
