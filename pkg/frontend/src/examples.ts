/**
 * Bundled example statements, from a single atomic component up to a
 * fully annotated statement with nested combinations and action pairs.
 *
 * The traffic-rule entries are the same sentence coded at increasing
 * levels of detail, so stepping through them shows how the notation
 * grows.
 */

export interface ExampleStatement {
  name: string;
  raw: string;
  coded: string;
}

const VIOLATION_RAW =
  'If an officer observes or is made aware of a violation, the officer ' +
  'must fine the violator and file a report with the authority.';

const VIOLATION_SAFETY_RAW =
  'If an officer observes or is made aware of a violation and deems an ' +
  'intervention safe, the officer must fine the violator and file a ' +
  'report with the district court.';

export const EXAMPLES: readonly ExampleStatement[] = [
  {
    name: 'atomic component',
    raw: 'An actor.',
    coded: 'A(actor)',
  },
  {
    name: 'component combination',
    raw: 'An actor may fine or arrest.',
    coded: 'A(actor) D(may) I(fine [XOR] arrest)',
  },
  {
    name: 'grouped combination',
    raw: 'An actor must monitor, and fine or arrest.',
    coded: 'A(actor) D(must) I(monitor [AND] (fine [XOR] arrest))',
  },
  {
    name: 'nested condition',
    raw: 'An actor must act when the actor observes a violation.',
    coded:
      'A(actor) D(must) I(act) under the condition that ' +
      'Cac{A(actor) I(observes) Bdir(violation)}',
  },
  {
    name: 'nested combination',
    raw:
      'An actor must act when an enforcer observes a violation and the ' +
      'violator attempts an escape.',
    coded:
      'A(actor) D(must) I(act) under the condition that ' +
      'Cac{Cac{A(enforcer) I(observes) Bdir(violation)} [AND] ' +
      'Cac{ A(violator) I(attempts) Bdir(escape)}}',
  },
  {
    name: 'pair combination',
    raw:
      'An enforcer may investigate compliance or delegate the ' +
      'investigation to a colleague.',
    coded:
      'A(enforcer) D(may) {I(investigate) Bdir(compliance) [XOR] ' +
      'I(delegate) Bdir(investigation) to Bind(colleague)}',
  },
  {
    name: 'annotated statement',
    raw: 'An officer must fine a violator when the violator violates.',
    coded:
      '[statement-type=consequence] A[role=enforcer](officer) ' +
      'D[stringency=high](must) I[act=sanction](fine) ' +
      '[another statement-level annotation] Bdir(violator), ' +
      'Cac[condition=violation]{if A[role=violator](violator) ' +
      'I[act=violate](violates)}',
  },
  {
    name: 'traffic rule, plain coding',
    raw: VIOLATION_RAW,
    coded:
      'Cac(If officer observes or is made aware of violation), ' +
      'A(officer) D(must) I(fine and report) Bdir(violator) to ' +
      'Bind(authority).',
  },
  {
    name: 'traffic rule, inline combinations',
    raw: VIOLATION_RAW,
    coded:
      'Cac(If officer (observes [XOR] is made aware of) violation), ' +
      'A(officer) D(must) I(fine [AND] report) Bdir(violator) to ' +
      'Bind(authority).',
  },
  {
    name: 'traffic rule, nested condition',
    raw: VIOLATION_RAW,
    coded:
      'Cac{If A(officer) I(observes [XOR] is made aware of) ' +
      'Bdir(violation)}, A(officer) D(must) I(fine [AND] report) ' +
      'Bdir(violator) to Bind(authority).',
  },
  {
    name: 'traffic rule, nested combination',
    raw: VIOLATION_SAFETY_RAW,
    coded:
      'Cac{Cac{If A(officer) I(observes [XOR] is made aware of) ' +
      'Bdir(violation)} [AND] Cac{if A(officer) I(deems) ' +
      'Bdir(intervention) Cex(safe)}}, A(officer) D(must) ' +
      'I(fine [AND] report) Bdir(violator) to Bind(authority).',
  },
  {
    name: 'traffic rule, action pairs',
    raw: VIOLATION_SAFETY_RAW,
    coded:
      'Cac{Cac{If A(officer) I(observes [XOR] is made aware of) ' +
      'Bdir(violation)} [AND] Cac{if A(officer) I(deems) ' +
      'Bdir(intervention) Cex(safe)}}, A(officer) D(must) ' +
      '{I(fine) Bdir(violator) [AND] I(file) Bdir(report) with ' +
      'Bind(district court)}.',
  },
  {
    name: 'traffic rule, fully annotated',
    raw: VIOLATION_SAFETY_RAW,
    coded:
      'Cac{Cac[condition=violation]{If A[role=enforcer](officer) ' +
      'I(observes [XOR] is made aware of) Bdir(violation)} [AND] ' +
      'Cac[condition=safety]{if A[role=enforcer](officer) I(deems) ' +
      'Bdir(intervention) Cex(safe)}}, A[role=enforcer](officer) ' +
      'D[stringency=high](must) {I[act=sanction](fine) ' +
      'Bdir(violator) [AND] I[act=report](file) Bdir(report) with ' +
      'Bind[act=authority](district court)} ' +
      '[statement-type=consequential].',
  },
];

export function getExample(name: string): ExampleStatement | undefined {
  return EXAMPLES.find((e) => e.name === name);
}
