/**
 * Syntax reference shown in the help panel.
 *
 * The rows mirror the pattern table in the package documentation, so
 * the in-app help and the docs never drift apart.
 */

export interface SyntaxPattern {
  pattern: string;
  meaning: string;
}

export const SYNTAX_PATTERNS: readonly SyntaxPattern[] = [
  {
    pattern: 'A(content)',
    meaning: 'atomic component',
  },
  {
    pattern: 'I(fine [XOR] arrest)',
    meaning: 'combination of alternatives within one component',
  },
  {
    pattern: 'I(monitor [AND] (fine [XOR] arrest))',
    meaning: 'parentheses group alternatives; inner groups bind tighter',
  },
  {
    pattern: 'Cac{A(officer) I(observes) Bdir(violation)}',
    meaning: 'nested statement as component content',
  },
  {
    pattern: 'Cac{Cac{...} [AND] Cac{...}}',
    meaning: 'combination of nested components of one kind',
  },
  {
    pattern: '{I(fine) Bdir(violator) [AND] I(file) Bdir(report)}',
    meaning: 'component pair combination: alternative multi-component groups',
  },
  {
    pattern: 'A[role=enforcer](officer)',
    meaning: 'semantic annotation on a component',
  },
  {
    pattern: '[statement-type=consequential]',
    meaning: 'statement-level annotation',
  },
];

export const COMPONENT_CODES: readonly [string, string][] = [
  ['A', 'Attributes'],
  ['A,p', 'Attributes Property'],
  ['D', 'Deontic'],
  ['I', 'Aim'],
  ['Bdir', 'Direct Object'],
  ['Bdir,p', 'Direct Object Property'],
  ['Bind', 'Indirect Object'],
  ['Bind,p', 'Indirect Object Property'],
  ['E', 'Constituted Entity'],
  ['E,p', 'Constituted Entity Property'],
  ['M', 'Modal'],
  ['F', 'Constitutive Function'],
  ['P', 'Constituting Properties'],
  ['P,p', 'Constituting Properties Property'],
  ['Cac', 'Activation Condition'],
  ['Cex', 'Execution Constraint'],
  ['O', 'Or Else'],
];
