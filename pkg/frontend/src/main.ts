/**
 * DOM wiring for the single-page app.
 *
 * All logic with behavior worth testing lives in the sibling modules;
 * this file only connects them to elements in index.html. The editor
 * highlight uses the backdrop trick: a div behind the textarea shows
 * the same text with marked spans, the textarea itself stays the only
 * owner of the content.
 */

import {
  Submitter,
  type ParseParams,
  type ParseRequestBody,
  type PositionedIssue,
  type TreeDoc,
} from './api.js';
import { matchAt } from './brackets.js';
import { EXAMPLES, getExample } from './examples.js';
import { COMPONENT_CODES, SYNTAX_PATTERNS } from './help.js';
import { loadParams, saveParams, type StorageLike } from './params.js';
import { splitAtSpan } from './span.js';
import { flatten, resetCollapsed, toggleNode } from './tree.js';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const rawInput = el<HTMLInputElement>('raw');
const codedInput = el<HTMLTextAreaElement>('coded');
const backdrop = el<HTMLDivElement>('backdrop');
const exampleSelect = el<HTMLSelectElement>('example');
const submitButton = el<HTMLButtonElement>('submit');
const copyButton = el<HTMLButtonElement>('copy');
const paramsForm = el<HTMLFormElement>('params');
const banner = el<HTMLDivElement>('banner');
const retryButton = el<HTMLButtonElement>('retry');
const issueBox = el<HTMLDivElement>('issue');
const metricsBox = el<HTMLDivElement>('metrics');
const warningsList = el<HTMLUListElement>('warnings');
const treeBox = el<HTMLDivElement>('tree');
const previewBox = el<HTMLPreElement>('preview');
const helpBody = el<HTMLDivElement>('help-body');

const storage: StorageLike = window.localStorage;
const baseUrl = new URLSearchParams(location.search).get('api') ?? '';
const submitter = new Submitter(baseUrl);

let params: ParseParams = loadParams(storage);
let collapsed = resetCollapsed();
let currentDoc: TreeDoc | null = null;
let currentIssue: PositionedIssue | null = null;
let copyText = '';

/* ------------------------------------------------------------------ */
/* Editor backdrop                                                     */
/* ------------------------------------------------------------------ */

interface Marker {
  start: number;
  length: number;
  cls: string;
}

function escapeHtml(raw: string): string {
  return raw
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;');
}

function renderBackdrop(): void {
  const text = codedInput.value;
  const markers: Marker[] = [];
  if (currentIssue) {
    markers.push({
      start: currentIssue.position,
      length: Math.max(currentIssue.length, 1),
      cls: 'mark-error',
    });
  }
  const caret = codedInput.selectionStart ?? 0;
  const match = matchAt(text, caret);
  if (match?.kind === 'pair') {
    markers.push({ start: match.open, length: 1, cls: 'mark-bracket' });
    markers.push({ start: match.close, length: 1, cls: 'mark-bracket' });
  } else if (match?.kind === 'unmatched') {
    markers.push({ start: match.index, length: 1, cls: 'mark-mismatch' });
  }

  markers.sort((a, b) => a.start - b.start);
  let html = '';
  let pos = 0;
  for (const m of markers) {
    if (m.start < pos) continue; // error span already covers it
    const parts = splitAtSpan(text.slice(pos), m.start - pos, m.length);
    html += escapeHtml(parts.before);
    html += `<mark class="${m.cls}">${escapeHtml(parts.span)}</mark>`;
    pos = m.start + parts.span.length;
  }
  html += escapeHtml(text.slice(pos));
  backdrop.innerHTML = html + '\n';
  backdrop.scrollTop = codedInput.scrollTop;
  backdrop.scrollLeft = codedInput.scrollLeft;
}

/* ------------------------------------------------------------------ */
/* Results                                                             */
/* ------------------------------------------------------------------ */

function renderTree(): void {
  if (!currentDoc) return;
  treeBox.textContent = '';
  const list = document.createElement('ul');
  list.className = 'tree';
  for (const row of flatten(currentDoc.root, collapsed)) {
    const item = document.createElement('li');
    item.style.paddingLeft = `${row.depth * 1.1}em`;
    if (row.isProperty) item.classList.add('property-row');

    if (row.hasChildren) {
      const toggle = document.createElement('button');
      toggle.type = 'button';
      toggle.className = 'toggle';
      toggle.textContent = row.collapsed ? '▸' : '▾';
      toggle.addEventListener('click', () => {
        collapsed = toggleNode(collapsed, row.id);
        renderTree();
      });
      item.append(toggle);
    } else {
      const dot = document.createElement('span');
      dot.className = 'leaf-dot';
      dot.textContent = '•';
      item.append(dot);
    }

    const { node } = row;
    if (node.symbol) {
      const chip = document.createElement('span');
      chip.className = 'chip chip-symbol';
      chip.textContent = node.symbol;
      item.append(chip);
    }
    if (node.operator) {
      const chip = document.createElement('span');
      chip.className = 'chip chip-operator';
      chip.textContent = node.operator;
      item.append(chip);
    }
    const label = document.createElement('span');
    label.className = 'label';
    label.textContent = node.label;
    item.append(label);
    if (node.annotation) {
      const chip = document.createElement('span');
      chip.className = 'chip chip-annotation';
      chip.textContent = node.annotation;
      item.append(chip);
    }
    if (row.hiddenCount > 0) {
      const badge = document.createElement('span');
      badge.className = 'badge';
      badge.textContent = `+${row.hiddenCount} hidden`;
      item.append(badge);
    }
    list.append(item);
  }
  treeBox.append(list);
}

function showMetrics(dov: number, atoms: number, depth?: number): void {
  const parts = [
    `degree of variability ${dov}`,
    `${atoms} atomic statement${atoms === 1 ? '' : 's'}`,
  ];
  if (depth !== undefined) parts.push(`nesting depth ${depth}`);
  metricsBox.textContent = parts.join(' · ');
}

function showWarnings(warnings: string[]): void {
  warningsList.textContent = '';
  for (const w of warnings) {
    const item = document.createElement('li');
    item.textContent = w;
    warningsList.append(item);
  }
  warningsList.hidden = warnings.length === 0;
}

async function submit(): Promise<void> {
  const coded = codedInput.value;
  if (!coded.trim()) return;
  const body: ParseRequestBody = { codedStatement: coded, ...params };
  const raw = rawInput.value.trim();
  if (raw) body.rawStatement = raw;

  submitButton.disabled = true;
  const result = await submitter.submit(body);
  submitButton.disabled = false;
  if (result.status === 'cancelled') return;

  banner.hidden = true;
  issueBox.hidden = true;
  currentIssue = null;

  if (result.status === 'unavailable') {
    banner.hidden = false;
    banner.querySelector('span')!.textContent =
      `Service unreachable: ${result.message}`;
    renderBackdrop();
    return;
  }
  if (result.status === 'invalid') {
    currentIssue = result.error;
    issueBox.hidden = false;
    issueBox.textContent =
      `${result.error.kind}: ${result.error.message} ` +
      `(offset ${result.error.position})`;
    renderBackdrop();
    return;
  }

  const { data } = result;
  collapsed = resetCollapsed();
  showWarnings(data.warnings);
  if (typeof data.output === 'string') {
    currentDoc = null;
    treeBox.hidden = true;
    previewBox.hidden = false;
    previewBox.textContent = data.output;
    copyText = data.output;
    showMetrics(data.degreeOfVariability, data.atomCount);
  } else {
    currentDoc = data.output;
    previewBox.hidden = true;
    treeBox.hidden = false;
    renderTree();
    copyText = JSON.stringify(data.output, null, 2);
    showMetrics(
      data.degreeOfVariability,
      data.atomCount,
      data.output.metrics.maxNestingDepth,
    );
  }
  copyButton.disabled = false;
  renderBackdrop();
}

/* ------------------------------------------------------------------ */
/* Parameters form                                                     */
/* ------------------------------------------------------------------ */

function paramsToForm(): void {
  (paramsForm.elements.namedItem('output') as HTMLSelectElement).value =
    params.output;
  (paramsForm.elements.namedItem('level') as HTMLSelectElement).value =
    params.level;
  (paramsForm.elements.namedItem('stmtId') as HTMLInputElement).value =
    params.stmtId;
  for (const name of [
    'includeHeaders',
    'includeAnnotations',
    'includeProperties',
    'conditionsFirst',
  ] as const) {
    (paramsForm.elements.namedItem(name) as HTMLInputElement).checked =
      params[name];
  }
}

function formToParams(): void {
  const output = (paramsForm.elements.namedItem('output') as
    HTMLSelectElement).value;
  const level = (paramsForm.elements.namedItem('level') as
    HTMLSelectElement).value;
  const stmtId = (paramsForm.elements.namedItem('stmtId') as
    HTMLInputElement).value;
  const flag = (name: string) =>
    (paramsForm.elements.namedItem(name) as HTMLInputElement).checked;
  params = {
    output: output as ParseParams['output'],
    level: level as ParseParams['level'],
    stmtId: stmtId || '1',
    includeHeaders: flag('includeHeaders'),
    includeAnnotations: flag('includeAnnotations'),
    includeProperties: flag('includeProperties'),
    conditionsFirst: flag('conditionsFirst'),
  };
  saveParams(storage, params);
}

/* ------------------------------------------------------------------ */
/* Help panel and examples                                             */
/* ------------------------------------------------------------------ */

function buildHelp(): void {
  const table = document.createElement('table');
  for (const row of SYNTAX_PATTERNS) {
    const tr = document.createElement('tr');
    const pattern = document.createElement('td');
    const code = document.createElement('code');
    code.textContent = row.pattern;
    pattern.append(code);
    const meaning = document.createElement('td');
    meaning.textContent = row.meaning;
    tr.append(pattern, meaning);
    table.append(tr);
  }
  helpBody.append(table);

  const codes = document.createElement('p');
  codes.className = 'component-codes';
  codes.textContent = COMPONENT_CODES.map(
    ([code, name]) => `${code} ${name}`,
  ).join(' · ');
  helpBody.append(codes);
}

function buildExampleList(): void {
  for (const example of EXAMPLES) {
    const option = document.createElement('option');
    option.value = example.name;
    option.textContent = example.name;
    exampleSelect.append(option);
  }
}

/* ------------------------------------------------------------------ */
/* Events                                                              */
/* ------------------------------------------------------------------ */

submitButton.addEventListener('click', () => void submit());
retryButton.addEventListener('click', () => void submit());

codedInput.addEventListener('input', () => {
  currentIssue = null; // positions go stale as soon as the text moves
  issueBox.hidden = true;
  renderBackdrop();
});
for (const event of ['keyup', 'click', 'select', 'focus'] as const) {
  codedInput.addEventListener(event, renderBackdrop);
}
codedInput.addEventListener('scroll', () => {
  backdrop.scrollTop = codedInput.scrollTop;
  backdrop.scrollLeft = codedInput.scrollLeft;
});
codedInput.addEventListener('keydown', (ev) => {
  if ((ev.ctrlKey || ev.metaKey) && ev.key === 'Enter') {
    ev.preventDefault();
    void submit();
  }
});

paramsForm.addEventListener('change', formToParams);

exampleSelect.addEventListener('change', () => {
  const example = getExample(exampleSelect.value);
  if (!example) return;
  rawInput.value = example.raw;
  codedInput.value = example.coded;
  currentIssue = null;
  issueBox.hidden = true;
  renderBackdrop();
});

copyButton.addEventListener('click', () => {
  void navigator.clipboard.writeText(copyText);
});

buildHelp();
buildExampleList();
paramsToForm();
renderBackdrop();
