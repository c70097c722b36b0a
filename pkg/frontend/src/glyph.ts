/** Rose glyph geometry: 12 variable-radius petals, starting at 9 o'clock and
 * proceeding clockwise. The first 8 petals (baseline + treatment weeks) are
 * narrow and pink; the 4 post-treatment petals are wider and purple, covering
 * a fixed 160-degree arc to reflect the longer observation intervals. */

import { ACUTE_PETAL, LATE_PETAL } from './theme.js';

export const N_PETALS = 12;
export const ACUTE_PETAL_COUNT = 8;
const LATE_ARC_DEG = 160;
const ACUTE_ARC_DEG = 360 - LATE_ARC_DEG;
const START_DEG = 180; // 9 o'clock

export interface Petal {
  timepoint: number;
  stage: 'acute' | 'late';
  startDeg: number;
  widthDeg: number;
  radius: number;
  color: string;
  empty: boolean;
  path: string;
}

export function petalWidth(timepoint: number): number {
  return timepoint < ACUTE_PETAL_COUNT
    ? ACUTE_ARC_DEG / ACUTE_PETAL_COUNT
    : LATE_ARC_DEG / (N_PETALS - ACUTE_PETAL_COUNT);
}

function polar(cx: number, cy: number, radius: number, deg: number): [number, number] {
  const rad = (deg * Math.PI) / 180;
  return [cx + radius * Math.cos(rad), cy + radius * Math.sin(rad)];
}

export function petalGeometry(
  values: (number | null)[],
  cx: number,
  cy: number,
  maxRadius: number,
): Petal[] {
  if (values.length !== N_PETALS) {
    throw new Error(`expected ${N_PETALS} petal values, got ${values.length}`);
  }
  const petals: Petal[] = [];
  let start = START_DEG;
  for (let t = 0; t < N_PETALS; t += 1) {
    const width = petalWidth(t);
    const value = values[t];
    const empty = value === null;
    const radius = empty ? 0 : (Math.max(0, Math.min(10, value)) / 10) * maxRadius;
    const [x0, y0] = polar(cx, cy, radius, start);
    const [x1, y1] = polar(cx, cy, radius, start + width);
    petals.push({
      timepoint: t,
      stage: t < ACUTE_PETAL_COUNT ? 'acute' : 'late',
      startDeg: start,
      widthDeg: width,
      radius,
      color: t < ACUTE_PETAL_COUNT ? ACUTE_PETAL : LATE_PETAL,
      empty,
      path: empty
        ? ''
        : `M ${cx} ${cy} L ${x0} ${y0} A ${radius} ${radius} 0 0 1 ${x1} ${y1} Z`,
    });
    start += width;
  }
  return petals;
}

const SVG_NS = 'http://www.w3.org/2000/svg';

export function renderRoseGlyph(
  values: (number | null)[],
  size: number,
  options: { shadowed?: boolean; lowOpacity?: boolean } = {},
): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, 'svg');
  svg.setAttribute('width', String(size));
  svg.setAttribute('height', String(size));
  svg.setAttribute('viewBox', `0 0 ${size} ${size}`);
  svg.classList.add('rose-glyph');
  if (options.shadowed) svg.classList.add('shadowed');
  if (options.lowOpacity) svg.style.opacity = '0.35';

  const center = size / 2;
  if (options.shadowed) {
    const border = document.createElementNS(SVG_NS, 'circle');
    border.setAttribute('cx', String(center));
    border.setAttribute('cy', String(center));
    border.setAttribute('r', String(center - 1));
    border.setAttribute('class', 'shadow-border');
    border.setAttribute('fill', 'none');
    border.setAttribute('stroke', '#555');
    border.setAttribute('stroke-width', '2');
    svg.appendChild(border);
  }
  for (const petal of petalGeometry(values, center, center, center - 2)) {
    if (petal.empty) continue;
    const path = document.createElementNS(SVG_NS, 'path');
    path.setAttribute('d', petal.path);
    path.setAttribute('fill', petal.color);
    path.setAttribute('data-timepoint', String(petal.timepoint));
    path.setAttribute('data-stage', petal.stage);
    svg.appendChild(path);
  }
  return svg;
}
