/** Visual constants: stage hues, categorical cluster palette, severity ramp. */

export const ACUTE_PETAL = '#e87ea1'; // pink, during-treatment intervals
export const LATE_PETAL = '#8e6bc8'; // purple, post-treatment intervals

export const CLUSTER_PALETTE = [
  '#e08214', // c1 orange
  '#41ab5d', // c2 green
  '#4393c3', // c3 blue
  '#d6604d', // c4 brick
  '#9970ab', // c5 violet
  '#b8b223', // c6 olive
];

export const NO_CLUSTER_GRAY = '#b0b0b0';
export const SELECTION_BLUE = '#2166ac';
export const IN_CLUSTER_BAR = '#4393c3';
export const PLAIN_BAR = '#c4c4c4';

/** Light-to-dark red ramp for per-stage severity fills. */
export function severityRed(value: number, max: number): string {
  const t = max > 0 ? Math.max(0, Math.min(1, value / max)) : 0;
  const light = { r: 0xfd, g: 0xd4, b: 0xc2 };
  const dark = { r: 0x99, g: 0x00, b: 0x00 };
  const channel = (a: number, b: number) => Math.round(a + (b - a) * t);
  return `rgb(${channel(light.r, dark.r)}, ${channel(light.g, dark.g)}, ${channel(light.b, dark.b)})`;
}

export function clusterColor(clusterId: number): string {
  return CLUSTER_PALETTE[(clusterId - 1) % CLUSTER_PALETTE.length];
}
