/** Anchor row: one rose glyph per symptom for the whole cohort, in the served
 * cosine order, with shadowed borders on symptoms predicted by any cluster.
 * Fixed and non-configurable; glyph clicks drive the shared symptom
 * selection, which re-layers the patient scatterplots. */

import { renderRoseGlyph } from '../glyph.js';
import type { SelectionStore } from '../state.js';
import type { ProfilesResponse } from '../types.js';

const GLYPH_SIZE = 44;

export interface RoseRowView {
  destroy(): void;
}

export function mountRoseRow(
  container: HTMLElement,
  data: ProfilesResponse,
  store: SelectionStore,
): RoseRowView {
  const byName = new Map(data.profiles.map((p) => [p.symptom, p]));
  const predicted = new Set(data.predicted);

  const render = () => {
    container.replaceChildren();
    container.classList.add('rose-row');
    for (const symptom of data.ordering) {
      const profile = byName.get(symptom);
      if (!profile) continue;
      const cell = document.createElement('div');
      cell.className = 'rose-cell';
      cell.dataset.symptom = symptom;
      if (store.current.symptoms.has(symptom)) cell.classList.add('selected');
      const glyph = renderRoseGlyph(profile.values, GLYPH_SIZE, {
        shadowed: predicted.has(symptom),
      });
      const label = document.createElement('div');
      label.className = 'rose-label';
      label.textContent = symptom;
      cell.append(glyph, label);
      cell.addEventListener('click', () => store.toggleSymptom(symptom));
      container.appendChild(cell);
    }
  };

  const unsubscribe = store.subscribe(render);
  return {
    destroy() {
      unsubscribe();
      container.replaceChildren();
    },
  };
}
