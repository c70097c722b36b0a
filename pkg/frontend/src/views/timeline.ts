/** Cohort timeline: one row per patient with diagnosis ordinals, cluster
 * labels, and acute/late mean bars per symptom in the anchor order. A brushed
 * patient selection filters the rows to exactly that set; clicking a patient
 * id highlights it everywhere else. */

import { highlightedPatients } from '../linking.js';
import type { SelectionStore } from '../state.js';
import { IN_CLUSTER_BAR, PLAIN_BAR } from '../theme.js';
import type { RuleCluster, TimelineResponse, TimelineRow } from '../types.js';

const BAR_MAX = 26;

export interface TimelineView {
  destroy(): void;
  visiblePatients(): string[];
}

function renderBars(row: TimelineRow, stage: 'acute' | 'late'): HTMLElement {
  const strip = document.createElement('div');
  strip.className = `bar-strip ${stage}`;
  for (const bar of row.symptoms) {
    const mean = stage === 'acute' ? bar.acute_mean : bar.late_mean;
    const el = document.createElement('span');
    el.className = 'symptom-bar';
    el.dataset.symptom = bar.symptom;
    el.title = `${bar.symptom}: ${mean === null ? 'no data' : mean.toFixed(1)}`;
    el.style.height = `${mean === null ? 0 : (mean / 10) * BAR_MAX}px`;
    el.style.background = bar.in_cluster ? IN_CLUSTER_BAR : PLAIN_BAR;
    strip.appendChild(el);
  }
  return strip;
}

export function mountTimeline(
  container: HTMLElement,
  data: TimelineResponse,
  clusters: RuleCluster[],
  store: SelectionStore,
): TimelineView {
  let visible: string[] = [];

  const render = () => {
    container.replaceChildren();
    container.classList.add('timeline-view');
    const selection = store.current;
    const rows =
      selection.patients.size === 0
        ? data.rows
        : data.rows.filter((row) => selection.patients.has(row.patient_id));
    visible = rows.map((row) => row.patient_id);
    const highlight = highlightedPatients(selection, clusters);

    for (const row of rows) {
      const el = document.createElement('div');
      el.className = 'timeline-row';
      el.dataset.patientId = row.patient_id;
      if (highlight.has(row.patient_id)) el.classList.add('highlighted');

      const meta = document.createElement('div');
      meta.className = 'timeline-meta';
      const id = document.createElement('a');
      id.className = 'patient-id';
      id.textContent = row.patient_id;
      id.addEventListener('click', () => store.togglePatient(row.patient_id));
      const stages = document.createElement('span');
      stages.className = 'stages';
      stages.textContent = `${row.t_stage}/${row.n_stage}`;
      const labels = document.createElement('span');
      labels.className = 'cluster-labels';
      labels.textContent =
        row.clusters.length > 0 ? row.clusters.map((c) => `c${c}`).join(',') : 'none';
      meta.append(id, stages, labels);

      el.append(meta, renderBars(row, 'acute'), renderBars(row, 'late'));
      container.appendChild(el);
    }
  };

  const unsubscribe = store.subscribe(render);
  return {
    destroy() {
      unsubscribe();
      container.replaceChildren();
    },
    visiblePatients(): string[] {
      return [...visible];
    },
  };
}
