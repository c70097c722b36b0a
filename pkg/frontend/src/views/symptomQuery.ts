/** Symptom query: per-symptom acute/late prevalence bars in the served order
 * (highest cumulative percentage first); cluster symptoms render blue. */

import type { SelectionStore } from '../state.js';
import { ACUTE_PETAL, IN_CLUSTER_BAR, LATE_PETAL, PLAIN_BAR } from '../theme.js';
import type { PrevalenceResponse } from '../types.js';

const BAR_SPAN = 140;

export interface SymptomQueryView {
  destroy(): void;
}

export function mountSymptomQuery(
  container: HTMLElement,
  data: PrevalenceResponse,
  store: SelectionStore,
): SymptomQueryView {
  const render = () => {
    container.replaceChildren();
    container.classList.add('symptom-query');
    for (const row of data.rows) {
      const el = document.createElement('div');
      el.className = 'query-row';
      el.dataset.symptom = row.symptom;
      if (row.in_cluster) el.classList.add('in-cluster');
      if (store.current.symptoms.has(row.symptom)) el.classList.add('selected');

      const label = document.createElement('span');
      label.className = 'query-label';
      label.textContent = row.symptom;
      label.style.color = row.in_cluster ? IN_CLUSTER_BAR : 'inherit';

      const bars = document.createElement('span');
      bars.className = 'query-bars';
      for (const [stage, pct, hue] of [
        ['acute', row.pct_acute, ACUTE_PETAL],
        ['late', row.pct_late, LATE_PETAL],
      ] as const) {
        const bar = document.createElement('span');
        bar.className = `query-bar ${stage}`;
        bar.style.width = `${pct * BAR_SPAN}px`;
        bar.style.background = row.in_cluster ? hue : PLAIN_BAR;
        bar.title = `${stage}: ${(pct * 100).toFixed(1)}%`;
        bars.appendChild(bar);
      }

      el.append(label, bars);
      el.addEventListener('click', () => store.toggleSymptom(row.symptom));
      container.appendChild(el);
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
