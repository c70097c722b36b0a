/** Selection-to-highlight derivation shared by the coordinated views. */

import type { Selection } from './state.js';
import type { RuleCluster } from './types.js';

/** Brushed/clicked patients plus every patient of a selected cluster. */
export function highlightedPatients(
  selection: Selection,
  clusters: RuleCluster[],
): Set<string> {
  const out = new Set(selection.patients);
  for (const cluster of clusters) {
    if (selection.clusters.has(cluster.cluster_id)) {
      for (const pid of cluster.patients) out.add(pid);
    }
  }
  return out;
}
