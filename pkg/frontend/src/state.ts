/** Single shared selection store. Every mounted view subscribes and
 * re-renders synchronously on each change, so no view can show a stale
 * selection between updates. */

export interface Selection {
  symptoms: ReadonlySet<string>;
  patients: ReadonlySet<string>;
  clusters: ReadonlySet<number>;
  sankeyNodes: ReadonlySet<string>;
}

export type SelectionListener = (selection: Selection, version: number) => void;

function emptySelection(): Selection {
  return {
    symptoms: new Set(),
    patients: new Set(),
    clusters: new Set(),
    sankeyNodes: new Set(),
  };
}

export class SelectionStore {
  private selection: Selection = emptySelection();
  private listeners = new Set<SelectionListener>();
  private version = 0;

  get current(): Selection {
    return this.selection;
  }

  get updateCount(): number {
    return this.version;
  }

  subscribe(listener: SelectionListener): () => void {
    this.listeners.add(listener);
    listener(this.selection, this.version);
    return () => this.listeners.delete(listener);
  }

  private commit(next: Selection): void {
    this.selection = next;
    this.version += 1;
    for (const listener of this.listeners) listener(next, this.version);
  }

  setPatients(patients: Iterable<string>): void {
    this.commit({ ...this.selection, patients: new Set(patients) });
  }

  togglePatient(patientId: string): void {
    const patients = new Set(this.selection.patients);
    if (!patients.delete(patientId)) patients.add(patientId);
    this.commit({ ...this.selection, patients });
  }

  toggleSymptom(symptom: string): void {
    const symptoms = new Set(this.selection.symptoms);
    if (!symptoms.delete(symptom)) symptoms.add(symptom);
    this.commit({ ...this.selection, symptoms });
  }

  toggleCluster(clusterId: number): void {
    const clusters = new Set(this.selection.clusters);
    if (!clusters.delete(clusterId)) clusters.add(clusterId);
    this.commit({ ...this.selection, clusters });
  }

  selectSankeyNode(nodeKey: string, patients: Iterable<string>): void {
    const sankeyNodes = new Set(this.selection.sankeyNodes);
    if (sankeyNodes.has(nodeKey)) {
      sankeyNodes.delete(nodeKey);
      this.commit({ ...this.selection, sankeyNodes, patients: new Set() });
    } else {
      sankeyNodes.clear();
      sankeyNodes.add(nodeKey);
      this.commit({ ...this.selection, sankeyNodes, patients: new Set(patients) });
    }
  }

  clear(): void {
    this.commit(emptySelection());
  }
}
