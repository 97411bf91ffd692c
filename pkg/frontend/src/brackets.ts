/**
 * Bracket matching for the statement editor.
 *
 * Pure text functions: the DOM layer turns the returned indexes into
 * highlight spans. Pairs are (), {} and []; a closing bracket only
 * matches the innermost open bracket of the same kind, anything else
 * is flagged as unmatched.
 */

export const OPEN = '({[';
export const CLOSE = ')}]';

export interface BracketPair {
  open: number;
  close: number;
}

export interface BracketScan {
  pairs: BracketPair[];
  unmatched: number[];
}

export type CaretMatch =
  | { kind: 'pair'; open: number; close: number }
  | { kind: 'unmatched'; index: number }
  | null;

/** Pair up every bracket in the text and collect the leftovers. */
export function scanBrackets(text: string): BracketScan {
  const pairs: BracketPair[] = [];
  const unmatched: number[] = [];
  const stack: { char: string; index: number }[] = [];
  for (let i = 0; i < text.length; i++) {
    const ch = text[i] as string;
    const kind = CLOSE.indexOf(ch);
    if (OPEN.includes(ch)) {
      stack.push({ char: ch, index: i });
    } else if (kind >= 0) {
      const top = stack[stack.length - 1];
      if (top && top.char === (OPEN[kind] as string)) {
        stack.pop();
        pairs.push({ open: top.index, close: i });
      } else {
        unmatched.push(i);
      }
    }
  }
  for (const left of stack) unmatched.push(left.index);
  unmatched.sort((a, b) => a - b);
  return { pairs, unmatched };
}

function bracketAt(text: string, index: number): boolean {
  const ch = text[index];
  return ch !== undefined && (OPEN.includes(ch) || CLOSE.includes(ch));
}

/**
 * Highlight decision for a caret position.
 *
 * The bracket immediately before the caret wins over the one at the
 * caret, mirroring common editor behavior while typing.
 */
export function matchAt(text: string, caret: number): CaretMatch {
  let index: number | null = null;
  if (caret > 0 && bracketAt(text, caret - 1)) index = caret - 1;
  else if (bracketAt(text, caret)) index = caret;
  if (index === null) return null;

  const scan = scanBrackets(text);
  for (const pair of scan.pairs) {
    if (pair.open === index || pair.close === index) {
      return { kind: 'pair', open: pair.open, close: pair.close };
    }
  }
  return { kind: 'unmatched', index };
}
