/** Patient scatterplot: total acute severity (x) against total late severity
 * (y). Layer one splits each point into cluster-membership segments (gray for
 * none); layer two shows acute/late halves on the red severity ramp. Brushing
 * publishes the covered patient ids to the shared selection. */

import { highlightedPatients } from '../linking.js';
import type { SelectionStore } from '../state.js';
import { NO_CLUSTER_GRAY, clusterColor, severityRed } from '../theme.js';
import type { PatientProjectionResponse, ProjectionPoint, RuleCluster } from '../types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const WIDTH = 420;
const HEIGHT = 320;
const PAD = 24;
const POINT_R = 6;

export type ScatterLayer = 'clusters' | 'severity';

export interface PatientScatterView {
  destroy(): void;
  setLayer(layer: ScatterLayer): void;
  /** Scripted brush in data coordinates; selects the covered patients. */
  brush(x0: number, y0: number, x1: number, y1: number): string[];
  selectedIds(): string[];
}

function extent(values: number[]): [number, number] {
  if (values.length === 0) return [0, 1];
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  return hi > lo ? [lo, hi] : [lo, lo + 1];
}

function segmentPath(cx: number, cy: number, r: number, a0: number, a1: number): string {
  const [x0, y0] = [cx + r * Math.cos(a0), cy + r * Math.sin(a0)];
  const [x1, y1] = [cx + r * Math.cos(a1), cy + r * Math.sin(a1)];
  const large = a1 - a0 > Math.PI ? 1 : 0;
  return `M ${cx} ${cy} L ${x0} ${y0} A ${r} ${r} 0 ${large} 1 ${x1} ${y1} Z`;
}

export function mountPatientScatter(
  container: HTMLElement,
  data: PatientProjectionResponse,
  clusters: RuleCluster[],
  store: SelectionStore,
  initialLayer: ScatterLayer = 'clusters',
): PatientScatterView {
  let layer = initialLayer;
  const points = data.points;
  const [xLo, xHi] = extent(points.map((p) => p.x));
  const [yLo, yHi] = extent(points.map((p) => p.y));
  const sx = (x: number) => PAD + ((x - xLo) / (xHi - xLo)) * (WIDTH - 2 * PAD);
  const sy = (y: number) => HEIGHT - PAD - ((y - yLo) / (yHi - yLo)) * (HEIGHT - 2 * PAD);
  const maxSeverity = Math.max(
    1,
    ...points.map((p) => Math.max(p.acute_total ?? 0, p.late_total ?? 0)),
  );

  const renderPoint = (svg: SVGSVGElement, point: ProjectionPoint, highlighted: boolean) => {
    const group = document.createElementNS(SVG_NS, 'g');
    group.setAttribute('class', 'patient-point');
    group.dataset.patientId = point.id;
    if (highlighted) group.classList.add('selected');
    const cx = sx(point.x);
    const cy = sy(point.y);

    if (layer === 'clusters') {
      if (point.clusters.length === 0) {
        const circle = document.createElementNS(SVG_NS, 'circle');
        circle.setAttribute('cx', String(cx));
        circle.setAttribute('cy', String(cy));
        circle.setAttribute('r', String(POINT_R));
        circle.setAttribute('fill', NO_CLUSTER_GRAY);
        group.appendChild(circle);
      } else {
        const step = (2 * Math.PI) / point.clusters.length;
        point.clusters.forEach((clusterId, i) => {
          const path = document.createElementNS(SVG_NS, 'path');
          path.setAttribute(
            'd',
            point.clusters.length === 1
              ? segmentPath(cx, cy, POINT_R, -Math.PI / 2, Math.PI * 1.499)
              : segmentPath(cx, cy, POINT_R, -Math.PI / 2 + i * step, -Math.PI / 2 + (i + 1) * step),
          );
          path.setAttribute('fill', clusterColor(clusterId));
          path.setAttribute('data-cluster', String(clusterId));
          group.appendChild(path);
        });
      }
    } else {
      // Severity halves: acute on the left, late on the right.
      const acute = document.createElementNS(SVG_NS, 'path');
      acute.setAttribute('d', segmentPath(cx, cy, POINT_R, Math.PI / 2, (3 * Math.PI) / 2));
      acute.setAttribute('fill', severityRed(point.acute_total ?? 0, maxSeverity));
      acute.setAttribute('data-stage', 'acute');
      const late = document.createElementNS(SVG_NS, 'path');
      late.setAttribute('d', segmentPath(cx, cy, POINT_R, -Math.PI / 2, Math.PI / 2));
      late.setAttribute('fill', severityRed(point.late_total ?? 0, maxSeverity));
      late.setAttribute('data-stage', 'late');
      group.append(acute, late);
    }
    group.addEventListener('click', () => store.togglePatient(point.id));
    svg.appendChild(group);
  };

  const render = () => {
    container.replaceChildren();
    container.classList.add('patient-scatter');
    const svg = document.createElementNS(SVG_NS, 'svg');
    svg.setAttribute('width', String(WIDTH));
    svg.setAttribute('height', String(HEIGHT));
    svg.setAttribute('viewBox', `0 0 ${WIDTH} ${HEIGHT}`);
    const highlight = highlightedPatients(store.current, clusters);
    for (const point of points) renderPoint(svg, point, highlight.has(point.id));
    container.appendChild(svg);
  };

  const unsubscribe = store.subscribe(render);
  return {
    destroy() {
      unsubscribe();
      container.replaceChildren();
    },
    setLayer(next: ScatterLayer) {
      layer = next;
      render();
    },
    brush(x0: number, y0: number, x1: number, y1: number): string[] {
      const [lox, hix] = [Math.min(x0, x1), Math.max(x0, x1)];
      const [loy, hiy] = [Math.min(y0, y1), Math.max(y0, y1)];
      const ids = points
        .filter((p) => p.x >= lox && p.x <= hix && p.y >= loy && p.y <= hiy)
        .map((p) => p.id);
      store.setPatients(ids);
      return ids;
    },
    selectedIds(): string[] {
      return [...store.current.patients].sort();
    },
  };
}
