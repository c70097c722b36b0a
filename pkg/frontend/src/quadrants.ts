/** Quadrant configuration and URL-hash round-trip for shareable sessions.
 * The anchor row is fixed; only the four quadrants are configurable. */

export const VIEW_TYPES = [
  'symptom-clustering',
  'patient-clustering',
  'cohort-characteristics',
  'cohort-timeline',
  'symptom-query',
] as const;

export type ViewType = (typeof VIEW_TYPES)[number];

export interface QuadrantConfig {
  quadrant: 1 | 2 | 3 | 4;
  view: ViewType;
  treatment: string;
}

export function encodeHash(configs: QuadrantConfig[]): string {
  const params = new URLSearchParams();
  for (const config of configs) {
    params.set(`q${config.quadrant}`, `${config.view}:${config.treatment}`);
  }
  return `#${params.toString()}`;
}

export function decodeHash(hash: string, fallback: QuadrantConfig[]): QuadrantConfig[] {
  const params = new URLSearchParams(hash.replace(/^#/, ''));
  const configs: QuadrantConfig[] = [];
  for (const quadrant of [1, 2, 3, 4] as const) {
    const raw = params.get(`q${quadrant}`);
    const base = fallback.find((c) => c.quadrant === quadrant);
    if (!raw || !base) {
      if (base) configs.push(base);
      continue;
    }
    const [view, treatment] = raw.split(':');
    if ((VIEW_TYPES as readonly string[]).includes(view) && treatment) {
      configs.push({ quadrant, view: view as ViewType, treatment });
    } else {
      configs.push(base);
    }
  }
  return configs;
}
