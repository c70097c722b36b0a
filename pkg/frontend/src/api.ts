/** Thin typed client over the analytics service; all numeric behavior is
 * server-side, the dashboard only renders what it is served. */

import type {
  ClustersResponse,
  MineResponse,
  MiningParams,
  PatientProjectionResponse,
  PrevalenceResponse,
  ProfilesResponse,
  SankeyResponse,
  SymptomProjectionResponse,
  Thresholds,
  TimelineResponse,
  TreatmentInfo,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        detail = ((await response.json()) as { detail?: string }).detail ?? detail;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  treatments(): Promise<{ treatments: TreatmentInfo[] }> {
    return this.request('/treatments');
  }

  mine(
    treatment: string,
    params?: Partial<MiningParams>,
    thresholds?: Partial<Thresholds>,
  ): Promise<MineResponse> {
    return this.post('/mine', { treatment, params: params ?? {}, thresholds: thresholds ?? {} });
  }

  rules(treatment: string, filtered: boolean): Promise<MineResponse> {
    return this.request(`/rules?treatment=${treatment}&filtered=${filtered}`);
  }

  cluster(
    treatment: string,
    policy: { cut_height?: number; n_clusters?: number },
  ): Promise<ClustersResponse> {
    return this.post('/clusters', { treatment, ...policy });
  }

  /** Latest clusters for the treatment; 409 until POST /clusters has run. */
  clusterLatest(treatment: string): Promise<ClustersResponse> {
    return this.request(`/clusters?treatment=${treatment}`);
  }

  profiles(treatment?: string): Promise<ProfilesResponse> {
    const query = treatment ? `?treatment=${treatment}` : '';
    return this.request(`/profiles${query}`);
  }

  prevalence(
    treatment: string,
    options: { theta_acute?: number; theta_late?: number; t_stage?: string; n_stage?: string } = {},
  ): Promise<PrevalenceResponse> {
    const params = new URLSearchParams({ treatment });
    for (const [key, value] of Object.entries(options)) {
      if (value !== undefined) params.set(key, String(value));
    }
    return this.request(`/prevalence?${params}`);
  }

  symptomProjection(treatment: string, seed?: number): Promise<SymptomProjectionResponse> {
    const query = seed === undefined ? '' : `&seed=${seed}`;
    return this.request(`/projection/symptoms?treatment=${treatment}${query}`);
  }

  patientProjection(
    treatment: string,
    symptoms?: string[],
    seed?: number,
  ): Promise<PatientProjectionResponse> {
    const params = new URLSearchParams({ treatment });
    if (symptoms && symptoms.length > 0) params.set('symptoms', symptoms.join(','));
    if (seed !== undefined) params.set('seed', String(seed));
    return this.request(`/projection/patients?${params}`);
  }

  sankey(treatment: string): Promise<SankeyResponse> {
    return this.request(`/sankey?treatment=${treatment}`);
  }

  timeline(treatment: string, patients?: string[]): Promise<TimelineResponse> {
    const params = new URLSearchParams({ treatment });
    if (patients && patients.length > 0) params.set('patients', patients.join(','));
    return this.request(`/timeline?${params}`);
  }
}
