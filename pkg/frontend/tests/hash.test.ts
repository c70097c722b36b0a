import { describe, expect, it } from 'vitest';

import { QuadrantConfig, decodeHash, encodeHash } from '../src/quadrants.js';

const DEFAULTS: QuadrantConfig[] = [
  { quadrant: 1, view: 'symptom-clustering', treatment: 'CC' },
  { quadrant: 2, view: 'patient-clustering', treatment: 'CC' },
  { quadrant: 3, view: 'cohort-characteristics', treatment: 'CC' },
  { quadrant: 4, view: 'cohort-timeline', treatment: 'CC' },
];

describe('quadrant hash', () => {
  it('round trips', () => {
    const configs: QuadrantConfig[] = [
      { quadrant: 1, view: 'symptom-clustering', treatment: 'ICC' },
      { quadrant: 2, view: 'symptom-query', treatment: 'IRT' },
      { quadrant: 3, view: 'cohort-characteristics', treatment: 'RT' },
      { quadrant: 4, view: 'cohort-timeline', treatment: 'CC' },
    ];
    expect(decodeHash(encodeHash(configs), DEFAULTS)).toEqual(configs);
  });

  it('falls back per quadrant on garbage', () => {
    const decoded = decodeHash('#q1=not-a-view:CC&q2=symptom-query:RT', DEFAULTS);
    expect(decoded[0]).toEqual(DEFAULTS[0]);
    expect(decoded[1]).toEqual({ quadrant: 2, view: 'symptom-query', treatment: 'RT' });
    expect(decoded[2]).toEqual(DEFAULTS[2]);
  });

  it('empty hash keeps the defaults', () => {
    expect(decodeHash('', DEFAULTS)).toEqual(DEFAULTS);
  });
});
