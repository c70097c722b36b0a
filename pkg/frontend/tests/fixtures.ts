/** Service-shaped payloads for the view tests; ids and metrics are small but
 * structurally faithful to the HTTP contract. */

import type {
  ClustersResponse,
  PatientProjectionResponse,
  PrevalenceResponse,
  ProfilesResponse,
  RuleCluster,
  SankeyResponse,
  SymptomProjectionResponse,
  TimelineResponse,
} from '../src/types.js';

export const SYMPTOMS = [
  'swallow', 'speech', 'mucus', 'taste', 'constipation', 'teeth', 'mouthSores',
  'choking', 'skin', 'fatigue', 'sleep', 'distress', 'pain', 'drowsiness',
  'sadness', 'memory', 'numbness', 'dryMouth', 'appetite', 'breath', 'nausea',
  'vomit', 'work', 'enjoyment', 'activity', 'mood', 'walking', 'relations',
];

export const PATIENTS = ['p01', 'p02', 'p03', 'p04', 'p05', 'p06'];

export const CLUSTERS: RuleCluster[] = [
  {
    cluster_id: 1,
    rule_indices: [0, 1],
    acute_symptoms: ['nausea', 'taste'],
    late_symptoms: ['dryMouth'],
    patients: ['p01', 'p02', 'p03'],
    acute_support: 0.5,
    cluster_confidence: 0.9,
    cross_treatment_ratio: 1.88,
    degenerate: false,
    below_mining_threshold: false,
  },
  {
    cluster_id: 2,
    rule_indices: [2],
    acute_symptoms: ['fatigue'],
    late_symptoms: ['sleep'],
    patients: ['p04', 'p05'],
    acute_support: 0.33,
    cluster_confidence: 0.75,
    cross_treatment_ratio: 'unbounded',
    degenerate: false,
    below_mining_threshold: false,
  },
];

export const CLUSTERS_RESPONSE: ClustersResponse = {
  treatment: 'CC',
  params: { min_support: 0.3, min_confidence: 0.5, min_lift: 1.0, max_itemset_size: 4 },
  thresholds: { theta_acute: 5, theta_late: 3 },
  cut_policy: { cut_height: 0.5 },
  clusters: CLUSTERS,
};

export const PATIENT_PROJECTION: PatientProjectionResponse = {
  treatment: 'CC',
  seed: 0,
  symptoms: null,
  points: [
    { id: 'p01', x: 10, y: 9, clusters: [1], acute_total: 10, late_total: 9 },
    { id: 'p02', x: 14, y: 11, clusters: [1], acute_total: 14, late_total: 11 },
    { id: 'p03', x: 18, y: 14, clusters: [1, 2], acute_total: 18, late_total: 14 },
    { id: 'p04', x: 40, y: 2, clusters: [2], acute_total: 40, late_total: 2 },
    { id: 'p05', x: 44, y: 3, clusters: [2], acute_total: 44, late_total: 3 },
    { id: 'p06', x: 60, y: 50, clusters: [], acute_total: 60, late_total: 50 },
  ],
};

export const SANKEY: SankeyResponse = {
  treatment: 'CC',
  seed: 0,
  tiers: {
    assignments: Object.fromEntries(
      PATIENTS.map((pid, i) => [
        pid,
        { acute_tier: i < 3 ? 'low' : 'high', late_tier: i < 3 ? 'low' : 'medium' },
      ]),
    ),
    acute_fallback: false,
    late_fallback: false,
  },
  graph: {
    axes: [
      {
        name: 't_stage',
        nodes: [
          { label: 'T1', count: 3, patients: ['p01', 'p02', 'p03'] },
          { label: 'T2', count: 3, patients: ['p04', 'p05', 'p06'] },
        ],
      },
      {
        name: 'n_stage',
        nodes: [{ label: 'N1', count: 6, patients: PATIENTS }],
      },
      {
        name: 'cluster_combination',
        nodes: [
          { label: 'c1', count: 2, patients: ['p01', 'p02'] },
          { label: 'c1+c2', count: 1, patients: ['p03'] },
          { label: 'c2', count: 2, patients: ['p04', 'p05'] },
          { label: 'none', count: 1, patients: ['p06'] },
        ],
      },
      {
        name: 'acute_tier',
        nodes: [
          { label: 'low', count: 3, patients: ['p01', 'p02', 'p03'] },
          { label: 'high', count: 3, patients: ['p04', 'p05', 'p06'] },
        ],
      },
      {
        name: 'late_tier',
        nodes: [
          { label: 'low', count: 3, patients: ['p01', 'p02', 'p03'] },
          { label: 'medium', count: 3, patients: ['p04', 'p05', 'p06'] },
        ],
      },
    ],
    links: [
      { source_axis: 0, source: 'T1', target: 'N1', count: 3, patients: ['p01', 'p02', 'p03'] },
      { source_axis: 0, source: 'T2', target: 'N1', count: 3, patients: ['p04', 'p05', 'p06'] },
      { source_axis: 1, source: 'N1', target: 'c1', count: 2, patients: ['p01', 'p02'] },
      { source_axis: 1, source: 'N1', target: 'c1+c2', count: 1, patients: ['p03'] },
      { source_axis: 1, source: 'N1', target: 'c2', count: 2, patients: ['p04', 'p05'] },
      { source_axis: 1, source: 'N1', target: 'none', count: 1, patients: ['p06'] },
      { source_axis: 2, source: 'c1', target: 'low', count: 2, patients: ['p01', 'p02'] },
      { source_axis: 2, source: 'c1+c2', target: 'low', count: 1, patients: ['p03'] },
      { source_axis: 2, source: 'c2', target: 'high', count: 2, patients: ['p04', 'p05'] },
      { source_axis: 2, source: 'none', target: 'high', count: 1, patients: ['p06'] },
      { source_axis: 3, source: 'low', target: 'low', count: 3, patients: ['p01', 'p02', 'p03'] },
      { source_axis: 3, source: 'high', target: 'medium', count: 3, patients: ['p04', 'p05', 'p06'] },
    ],
  },
};

function bars(patientId: string) {
  return SYMPTOMS.map((symptom) => ({
    symptom,
    acute_mean: symptom === 'taste' ? 6 : null,
    late_mean: symptom === 'dryMouth' ? 4 : null,
    in_cluster: ['taste', 'nausea', 'dryMouth', 'fatigue', 'sleep'].includes(symptom),
  }));
}

export const TIMELINE: TimelineResponse = {
  treatment: 'CC',
  rows: PATIENTS.map((pid, i) => ({
    patient_id: pid,
    t_stage: i < 3 ? 'T1' : 'T2',
    n_stage: 'N1',
    clusters: CLUSTERS.filter((c) => c.patients.includes(pid)).map((c) => c.cluster_id),
    cumulative_severity: 20 - i,
    symptoms: bars(pid),
  })),
};

/** dryMouth first, then a served (not alphabetical) cosine order. */
export const ORDERING = [
  'dryMouth',
  ...SYMPTOMS.filter((s) => s !== 'dryMouth').sort((a, b) => b.localeCompare(a)),
];

export const PROFILES: ProfilesResponse = {
  treatment: null,
  profiles: SYMPTOMS.map((symptom) => ({
    symptom,
    values: Array.from({ length: 12 }, (_, t) =>
      symptom === 'vomit' ? null : ((t + symptom.length) % 11),
    ),
  })),
  ordering: ORDERING,
  predicted: ['dryMouth', 'fatigue', 'nausea', 'sleep', 'taste'],
};

export const PREVALENCE: PrevalenceResponse = {
  treatment: 'CC',
  thresholds: { theta_acute: 5, theta_late: 3 },
  t_stage: null,
  n_stage: null,
  rows: [
    { symptom: 'taste', pct_acute: 0.8, pct_late: 0.2, in_cluster: true },
    { symptom: 'dryMouth', pct_acute: 0.1, pct_late: 0.8, in_cluster: true },
    { symptom: 'pain', pct_acute: 0.4, pct_late: 0.1, in_cluster: false },
  ],
};

export const SYMPTOM_PROJECTION: SymptomProjectionResponse = {
  treatment: 'CC',
  seed: 0,
  projection: {
    acute_points: [
      { id: 'fatigue', x: 0.8, y: -0.1, clusters: [2] },
      { id: 'nausea', x: -0.4, y: 0.3, clusters: [1] },
      { id: 'taste', x: -0.5, y: 0.2, clusters: [1] },
    ],
    late_symptoms: [
      { symptom: 'dryMouth', predicted: true },
      { symptom: 'sleep', predicted: true },
      { symptom: 'mucus', predicted: false },
    ],
    explained_variance: [0.7, 0.2, 0.05],
    collision_diameter: 0.05,
  },
};
