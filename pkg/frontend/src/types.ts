/** Payload shapes served by the analytics service (lower_snake_case JSON). */

export interface TreatmentInfo {
  treatment: string;
  size: number;
  minable: boolean;
}

export interface MiningParams {
  min_support: number;
  min_confidence: number;
  min_lift: number;
  max_itemset_size: number;
}

export interface Thresholds {
  theta_acute: number;
  theta_late: number;
}

export interface Rule {
  antecedent: string[];
  consequent: string[];
  support: number;
  confidence: number;
  lift: number;
  supporters: string[];
}

export interface MineResponse {
  treatment: string;
  params: MiningParams;
  thresholds: Thresholds;
  n_sequences: number;
  filtered: boolean;
  rules: Rule[];
  unfiltered_rule_count: number;
}

export interface RuleCluster {
  cluster_id: number;
  rule_indices: number[];
  acute_symptoms: string[];
  late_symptoms: string[];
  patients: string[];
  acute_support: number;
  cluster_confidence: number | null;
  cross_treatment_ratio: number | 'unbounded';
  degenerate: boolean;
  below_mining_threshold: boolean;
}

export interface ClustersResponse {
  treatment: string;
  params: MiningParams;
  thresholds: Thresholds;
  cut_policy: { cut_height?: number; n_clusters?: number };
  clusters: RuleCluster[];
}

export interface SeverityProfile {
  symptom: string;
  values: (number | null)[];
}

export interface ProfilesResponse {
  treatment: string | null;
  profiles: SeverityProfile[];
  ordering: string[];
  predicted: string[];
}

export interface PrevalenceRow {
  symptom: string;
  pct_acute: number;
  pct_late: number;
  in_cluster: boolean;
}

export interface PrevalenceResponse {
  treatment: string;
  thresholds: Thresholds;
  t_stage: string | null;
  n_stage: string | null;
  rows: PrevalenceRow[];
}

export interface ProjectionPoint {
  id: string;
  x: number;
  y: number;
  clusters: number[];
  acute_total?: number;
  late_total?: number;
}

export interface SymptomProjectionResponse {
  treatment: string;
  seed: number;
  projection: {
    acute_points: ProjectionPoint[];
    late_symptoms: { symptom: string; predicted: boolean }[];
    explained_variance: number[];
    collision_diameter: number;
  };
}

export interface PatientProjectionResponse {
  treatment: string;
  seed: number;
  symptoms: string[] | null;
  points: ProjectionPoint[];
}

export interface SankeyNode {
  label: string;
  count: number;
  patients: string[];
}

export interface SankeyResponse {
  treatment: string;
  seed: number;
  tiers: {
    assignments: Record<string, { acute_tier: string; late_tier: string }>;
    acute_fallback: boolean;
    late_fallback: boolean;
  };
  graph: {
    axes: { name: string; nodes: SankeyNode[] }[];
    links: {
      source_axis: number;
      source: string;
      target: string;
      count: number;
      patients: string[];
    }[];
  };
}

export interface TimelineSymptomBar {
  symptom: string;
  acute_mean: number | null;
  late_mean: number | null;
  in_cluster: boolean;
}

export interface TimelineRow {
  patient_id: string;
  t_stage: string;
  n_stage: string;
  clusters: number[];
  cumulative_severity: number;
  symptoms: TimelineSymptomBar[];
}

export interface TimelineResponse {
  treatment: string;
  rows: TimelineRow[];
}
