"""JSON payload builders shared by the HTTP service and the batch CLI.

Field names are lower_snake_case, fractions stay decimal, and the unbounded
cross-treatment ratio serializes as the literal string "unbounded". Sets are
emitted sorted so payloads are byte-stable.
"""

from __future__ import annotations

import math

from .analytics import (
    BurdenTiers,
    PrevalenceRow,
    ProjectionPoint,
    SankeyGraph,
    SeverityProfile,
    SymptomProjection,
    TimelineRow,
)
from .clustering import CutPolicy, RuleCluster
from .mining import MiningParams, SequentialRule
from .sequences import Thresholds


def params_payload(params: MiningParams) -> dict:
    return {
        "min_support": params.min_support,
        "min_confidence": params.min_confidence,
        "min_lift": params.min_lift,
        "max_itemset_size": params.max_itemset_size,
    }


def thresholds_payload(thresholds: Thresholds) -> dict:
    return {
        "theta_acute": thresholds.theta_acute,
        "theta_late": thresholds.theta_late,
    }


def cut_policy_payload(policy: CutPolicy) -> dict:
    if policy.n_clusters is not None:
        return {"n_clusters": policy.n_clusters}
    return {"cut_height": policy.height}


def rule_payload(rule: SequentialRule) -> dict:
    return {
        "antecedent": sorted(rule.antecedent),
        "consequent": sorted(rule.consequent),
        "support": rule.support,
        "confidence": rule.confidence,
        "lift": rule.lift,
        "supporters": list(rule.supporters),
    }


def ratio_payload(ratio: float) -> float | str:
    return "unbounded" if math.isinf(ratio) else ratio


def cluster_payload(cluster: RuleCluster) -> dict:
    return {
        "cluster_id": cluster.cluster_id,
        "rule_indices": list(cluster.rule_indices),
        "acute_symptoms": sorted(cluster.acute_symptoms),
        "late_symptoms": sorted(cluster.late_symptoms),
        "patients": list(cluster.patients),
        "acute_support": cluster.acute_support,
        "cluster_confidence": cluster.cluster_confidence,
        "cross_treatment_ratio": ratio_payload(cluster.cross_treatment_ratio),
        "degenerate": cluster.degenerate,
        "below_mining_threshold": cluster.below_mining_threshold,
    }


def profile_payload(profile: SeverityProfile) -> dict:
    return {"symptom": profile.symptom, "values": list(profile.values)}


def prevalence_payload(row: PrevalenceRow) -> dict:
    return {
        "symptom": row.symptom,
        "pct_acute": row.pct_acute,
        "pct_late": row.pct_late,
        "in_cluster": row.in_cluster,
    }


def point_payload(point: ProjectionPoint) -> dict:
    payload = {
        "id": point.entity_id,
        "x": point.x,
        "y": point.y,
        "clusters": list(point.clusters),
    }
    if point.acute_total is not None:
        payload["acute_total"] = point.acute_total
        payload["late_total"] = point.late_total
    return payload


def symptom_projection_payload(projection: SymptomProjection) -> dict:
    return {
        "acute_points": [point_payload(p) for p in projection.acute_points],
        "late_symptoms": [
            {"symptom": entry.symptom, "predicted": entry.predicted}
            for entry in projection.late_symptoms
        ],
        "explained_variance": list(projection.explained_variance),
        "collision_diameter": projection.collision_diameter,
    }


def tiers_payload(tiers: BurdenTiers) -> dict:
    return {
        "assignments": {
            pid: {"acute_tier": acute, "late_tier": late}
            for pid, (acute, late) in sorted(tiers.assignments.items())
        },
        "acute_fallback": tiers.acute_fallback,
        "late_fallback": tiers.late_fallback,
    }


def sankey_payload(graph: SankeyGraph) -> dict:
    return {
        "axes": [
            {
                "name": axis.name,
                "nodes": [
                    {
                        "label": node.label,
                        "count": node.count,
                        "patients": list(node.patients),
                    }
                    for node in axis.nodes
                ],
            }
            for axis in graph.axes
        ],
        "links": [
            {
                "source_axis": link.source_axis,
                "source": link.source,
                "target": link.target,
                "count": link.count,
                "patients": list(link.patients),
            }
            for link in graph.links
        ],
    }


def timeline_payload(row: TimelineRow) -> dict:
    return {
        "patient_id": row.patient_id,
        "t_stage": row.t_stage,
        "n_stage": row.n_stage,
        "clusters": list(row.clusters),
        "cumulative_severity": row.cumulative_severity,
        "symptoms": [
            {
                "symptom": bar.symptom,
                "acute_mean": bar.acute_mean,
                "late_mean": bar.late_mean,
                "in_cluster": bar.in_cluster,
            }
            for bar in row.bars
        ],
    }
