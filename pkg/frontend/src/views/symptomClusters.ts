/** Symptom clustering view: acute half is the served 2D projection with one
 * rose glyph per symptom and an envelope per cluster; the late half lists
 * predicted symptoms plus low-opacity unpredicted ones. The legend shows the
 * three cluster metrics and toggles envelope highlighting. */

import { renderRoseGlyph } from '../glyph.js';
import type { SelectionStore } from '../state.js';
import { clusterColor } from '../theme.js';
import type {
  ClustersResponse,
  ProfilesResponse,
  SymptomProjectionResponse,
} from '../types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const WIDTH = 460;
const HEIGHT = 340;
const PAD = 36;
const GLYPH = 34;
const LATE_X = WIDTH - 70;
const ACUTE_SPAN = WIDTH - 180;

export interface SymptomClustersView {
  destroy(): void;
}

function scale(values: number[], lo: number, hi: number): (v: number) => number {
  const min = Math.min(...values);
  const max = Math.max(...values);
  const span = max > min ? max - min : 1;
  return (v: number) => lo + ((v - min) / span) * (hi - lo);
}

export function mountSymptomClusters(
  container: HTMLElement,
  projection: SymptomProjectionResponse,
  clusters: ClustersResponse,
  profiles: ProfilesResponse,
  store: SelectionStore,
): SymptomClustersView {
  const points = projection.projection.acute_points;
  const profileByName = new Map(profiles.profiles.map((p) => [p.symptom, p]));
  const sx = scale(points.map((p) => p.x), PAD, PAD + ACUTE_SPAN - GLYPH);
  const sy = scale(points.map((p) => p.y), PAD, HEIGHT - PAD - GLYPH);

  const glyphAt = (symptom: string, x: number, y: number, lowOpacity: boolean) => {
    const wrapper = document.createElementNS(SVG_NS, 'g');
    wrapper.setAttribute('transform', `translate(${x}, ${y})`);
    wrapper.setAttribute('class', 'symptom-glyph');
    wrapper.dataset.symptom = symptom;
    const profile = profileByName.get(symptom);
    const values = profile ? profile.values : new Array(12).fill(null);
    const foreign = document.createElementNS(SVG_NS, 'foreignObject');
    foreign.setAttribute('width', String(GLYPH));
    foreign.setAttribute('height', String(GLYPH));
    foreign.appendChild(renderRoseGlyph(values, GLYPH, { lowOpacity }));
    wrapper.appendChild(foreign);
    wrapper.addEventListener('click', () => store.toggleSymptom(symptom));
    return wrapper;
  };

  const render = () => {
    container.replaceChildren();
    container.classList.add('symptom-clusters');

    const svg = document.createElementNS(SVG_NS, 'svg');
    svg.setAttribute('width', String(WIDTH));
    svg.setAttribute('height', String(HEIGHT));
    svg.setAttribute('viewBox', `0 0 ${WIDTH} ${HEIGHT}`);

    const divider = document.createElementNS(SVG_NS, 'line');
    divider.setAttribute('x1', String(PAD + ACUTE_SPAN + 10));
    divider.setAttribute('x2', String(PAD + ACUTE_SPAN + 10));
    divider.setAttribute('y1', '10');
    divider.setAttribute('y2', String(HEIGHT - 10));
    divider.setAttribute('stroke', '#ccc');
    divider.setAttribute('stroke-dasharray', '4 3');
    svg.appendChild(divider);

    // Cluster envelopes behind the glyphs: bounding boxes of member symptoms.
    for (const cluster of clusters.clusters) {
      const members = points.filter((p) => cluster.acute_symptoms.includes(p.id));
      if (members.length === 0) continue;
      const xs = members.map((p) => sx(p.x));
      const ys = members.map((p) => sy(p.y));
      const rect = document.createElementNS(SVG_NS, 'rect');
      rect.setAttribute('x', String(Math.min(...xs) - 6));
      rect.setAttribute('y', String(Math.min(...ys) - 6));
      rect.setAttribute('width', String(Math.max(...xs) - Math.min(...xs) + GLYPH + 12));
      rect.setAttribute('height', String(Math.max(...ys) - Math.min(...ys) + GLYPH + 12));
      rect.setAttribute('rx', '10');
      rect.setAttribute('class', 'cluster-envelope');
      rect.dataset.cluster = String(cluster.cluster_id);
      rect.setAttribute('stroke', clusterColor(cluster.cluster_id));
      rect.setAttribute('stroke-width', '2');
      rect.setAttribute(
        'fill',
        store.current.clusters.has(cluster.cluster_id)
          ? clusterColor(cluster.cluster_id)
          : 'none',
      );
      rect.setAttribute('fill-opacity', '0.15');
      if (store.current.clusters.has(cluster.cluster_id)) rect.classList.add('highlighted');
      svg.appendChild(rect);
    }

    for (const point of points) {
      svg.appendChild(glyphAt(point.id, sx(point.x), sy(point.y), false));
    }

    // Late half: predicted on top, unpredicted dimmed below them.
    let lateY = PAD;
    for (const entry of projection.projection.late_symptoms) {
      const glyph = glyphAt(entry.symptom, LATE_X, lateY, !entry.predicted);
      glyph.classList.add(entry.predicted ? 'late-predicted' : 'late-unpredicted');
      svg.appendChild(glyph);
      const label = document.createElementNS(SVG_NS, 'text');
      label.setAttribute('x', String(LATE_X + GLYPH / 2));
      label.setAttribute('y', String(lateY + GLYPH + 10));
      label.setAttribute('text-anchor', 'middle');
      label.setAttribute('class', 'late-label');
      if (!entry.predicted) label.setAttribute('opacity', '0.4');
      label.textContent = entry.symptom;
      svg.appendChild(label);
      lateY += GLYPH + 22;
    }

    const legend = document.createElement('div');
    legend.className = 'cluster-legend';
    for (const cluster of clusters.clusters) {
      const row = document.createElement('div');
      row.className = 'legend-row';
      row.dataset.cluster = String(cluster.cluster_id);
      if (store.current.clusters.has(cluster.cluster_id)) row.classList.add('selected');
      const ratio =
        cluster.cross_treatment_ratio === 'unbounded'
          ? 'unbounded'
          : `${cluster.cross_treatment_ratio.toFixed(2)}x`;
      const confidence =
        cluster.cluster_confidence === null
          ? 'undefined'
          : `${(cluster.cluster_confidence * 100).toFixed(0)}%`;
      row.innerHTML =
        `<span class="swatch" style="background:${clusterColor(cluster.cluster_id)}"></span>` +
        `<span class="legend-id">c${cluster.cluster_id}</span> ` +
        `<span class="legend-rule">{${cluster.acute_symptoms.join(', ')}} → ` +
        `{${cluster.late_symptoms.join(', ')}}</span> ` +
        `<span class="legend-metrics">support ${(cluster.acute_support * 100).toFixed(0)}%, ` +
        `confidence ${confidence}, ${ratio} vs other treatments</span>`;
      row.addEventListener('click', () => store.toggleCluster(cluster.cluster_id));
      legend.appendChild(row);
    }

    container.append(legend, svg);
  };

  const unsubscribe = store.subscribe(render);
  return {
    destroy() {
      unsubscribe();
      container.replaceChildren();
    },
  };
}
