/** Anchor fidelity: 28 glyphs in the served cosine order, shadowed borders
 * exactly on the symptoms present in any served cluster. */

import { beforeEach, describe, expect, it } from 'vitest';

import { SelectionStore } from '../src/state.js';
import { mountRoseRow } from '../src/views/roseRow.js';
import { ORDERING, PROFILES } from './fixtures.js';

describe('anchor row', () => {
  let container: HTMLElement;
  let store: SelectionStore;

  beforeEach(() => {
    document.body.replaceChildren();
    container = document.createElement('div');
    document.body.appendChild(container);
    store = new SelectionStore();
    mountRoseRow(container, PROFILES, store);
  });

  it('renders 28 glyphs in the served cosine order', () => {
    const cells = [...container.querySelectorAll<HTMLElement>('.rose-cell')];
    expect(cells).toHaveLength(28);
    expect(cells.map((c) => c.dataset.symptom)).toEqual(ORDERING);
    expect(cells[0].dataset.symptom).toBe('dryMouth');
  });

  it('shadowed borders exactly on symptoms in any served cluster', () => {
    const shadowed = [...container.querySelectorAll<HTMLElement>('.rose-cell')]
      .filter((cell) => cell.querySelector('svg.shadowed'))
      .map((cell) => cell.dataset.symptom)
      .sort();
    expect(shadowed).toEqual([...PROFILES.predicted].sort());
  });

  it('glyph click toggles the shared symptom selection', () => {
    const cell = container.querySelector<HTMLElement>('[data-symptom="taste"]')!;
    cell.click();
    expect(store.current.symptoms.has('taste')).toBe(true);
    container.querySelector<HTMLElement>('[data-symptom="taste"]')!.click();
    expect(store.current.symptoms.has('taste')).toBe(false);
  });

  it('anchor row is fixed: selection changes re-render without reordering', () => {
    store.toggleSymptom('pain');
    const cells = [...container.querySelectorAll<HTMLElement>('.rose-cell')];
    expect(cells.map((c) => c.dataset.symptom)).toEqual(ORDERING);
  });
});
