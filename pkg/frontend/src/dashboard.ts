/** Dashboard composition: the fixed anchor row of rose glyphs over four
 * configurable quadrants, one shared selection store, and a toolbar whose
 * threshold/parameter changes trigger re-mining. The URL hash round-trips
 * the quadrant configuration for shareable sessions. */

import { ApiClient } from './api.js';
import { SelectionStore } from './state.js';
import { QuadrantConfig, ViewType, VIEW_TYPES, decodeHash, encodeHash } from './quadrants.js';
import { mountRoseRow } from './views/roseRow.js';
import { mountSymptomClusters } from './views/symptomClusters.js';
import { mountPatientScatter } from './views/patientScatter.js';
import { mountSankey } from './views/sankey.js';
import { mountTimeline } from './views/timeline.js';
import { mountSymptomQuery } from './views/symptomQuery.js';
import type { MiningParams, Thresholds } from './types.js';

interface MountedView {
  destroy(): void;
}

export interface DashboardOptions {
  params?: Partial<MiningParams>;
  thresholds?: Partial<Thresholds>;
  seed?: number;
  hash?: string;
  onHashChange?: (hash: string) => void;
}

export class Dashboard {
  readonly store = new SelectionStore();
  private mounted: MountedView[] = [];
  private configs: QuadrantConfig[];

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private options: DashboardOptions = {},
  ) {
    const fallback: QuadrantConfig[] = [
      { quadrant: 1, view: 'symptom-clustering', treatment: 'CC' },
      { quadrant: 2, view: 'patient-clustering', treatment: 'CC' },
      { quadrant: 3, view: 'cohort-characteristics', treatment: 'CC' },
      { quadrant: 4, view: 'cohort-timeline', treatment: 'CC' },
    ];
    this.configs = decodeHash(options.hash ?? '', fallback);
  }

  get hash(): string {
    return encodeHash(this.configs);
  }

  async mount(): Promise<void> {
    this.root.replaceChildren();
    const anchor = document.createElement('div');
    anchor.id = 'anchor-row';
    const grid = document.createElement('div');
    grid.id = 'quadrant-grid';
    this.root.append(anchor, grid);

    // The anchor row always shows the entire cohort.
    const cohortProfiles = await this.api.profiles();
    this.mounted.push(mountRoseRow(anchor, cohortProfiles, this.store));

    for (const config of this.configs) {
      const cell = document.createElement('div');
      cell.className = 'quadrant';
      cell.dataset.quadrant = String(config.quadrant);
      grid.appendChild(cell);
      await this.mountQuadrant(cell, config);
    }
    this.options.onHashChange?.(this.hash);
  }

  async configureQuadrant(quadrant: 1 | 2 | 3 | 4, view: ViewType, treatment: string): Promise<void> {
    if (!(VIEW_TYPES as readonly string[]).includes(view)) {
      throw new Error(`unknown view ${view}`);
    }
    this.configs = this.configs.map((c) =>
      c.quadrant === quadrant ? { quadrant, view, treatment } : c,
    );
    const cell = this.root.querySelector<HTMLElement>(`[data-quadrant="${quadrant}"]`);
    if (cell) await this.mountQuadrant(cell, { quadrant, view, treatment });
    this.options.onHashChange?.(this.hash);
  }

  /** Re-mine with new thresholds/params and remount every quadrant. */
  async remine(params?: Partial<MiningParams>, thresholds?: Partial<Thresholds>): Promise<void> {
    this.options.params = { ...this.options.params, ...params };
    this.options.thresholds = { ...this.options.thresholds, ...thresholds };
    for (const treatment of new Set(this.configs.map((c) => c.treatment))) {
      await this.api.mine(treatment, this.options.params, this.options.thresholds);
      await this.api.cluster(treatment, { cut_height: 0.5 });
    }
    await this.mount();
  }

  private async mountQuadrant(cell: HTMLElement, config: QuadrantConfig): Promise<void> {
    cell.replaceChildren();
    const header = document.createElement('div');
    header.className = 'quadrant-header';
    header.textContent = `${config.view} / ${config.treatment}`;
    cell.appendChild(header);
    const body = document.createElement('div');
    body.className = 'quadrant-body';
    cell.appendChild(body);

    const { view, treatment } = config;
    const seed = this.options.seed;
    if (view === 'symptom-clustering') {
      const [projection, clusters, profiles] = await Promise.all([
        this.api.symptomProjection(treatment, seed),
        this.api.clusterLatest(treatment),
        this.api.profiles(treatment),
      ]);
      this.mounted.push(mountSymptomClusters(body, projection, clusters, profiles, this.store));
    } else if (view === 'patient-clustering') {
      const [points, clusters] = await Promise.all([
        this.api.patientProjection(treatment, undefined, seed),
        this.api.clusterLatest(treatment),
      ]);
      this.mounted.push(mountPatientScatter(body, points, clusters.clusters, this.store));
    } else if (view === 'cohort-characteristics') {
      const [sankey, clusters] = await Promise.all([
        this.api.sankey(treatment),
        this.api.clusterLatest(treatment),
      ]);
      this.mounted.push(mountSankey(body, sankey, clusters.clusters, this.store));
    } else if (view === 'cohort-timeline') {
      const [timeline, clusters] = await Promise.all([
        this.api.timeline(treatment),
        this.api.clusterLatest(treatment),
      ]);
      this.mounted.push(mountTimeline(body, timeline, clusters.clusters, this.store));
    } else {
      const prevalence = await this.api.prevalence(treatment);
      this.mounted.push(mountSymptomQuery(body, prevalence, this.store));
    }
  }

  destroy(): void {
    for (const view of this.mounted) view.destroy();
    this.mounted = [];
    this.root.replaceChildren();
  }
}
