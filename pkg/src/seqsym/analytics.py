"""Derived cohort products consumed by the dashboard: severity trajectories,
symptom ordering, prevalence, projections, burden tiers, Sankey flows, and
per-patient timelines.

Means average only present ratings; missing values never enter a denominator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clustering import RuleCluster
from .cohort import CohortTable, PatientRecord
from .mining import SequentialRule
from .projection import (
    default_collision_diameter,
    kmeans_1d,
    pca_projection,
    pca_scores_2d,
    resolve_collisions,
)
from .sequences import PatientSequence, Thresholds
from .vocab import (
    N_STAGES,
    N_TIMEPOINTS,
    SYMPTOM_INDEX,
    SYMPTOMS,
    T_STAGES,
    Stage,
    timepoints_of,
)

TIER_NAMES = ("low", "medium", "high")


# ---------------------------------------------------------------------------
# Severity profiles and symptom ordering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeverityProfile:
    symptom: str
    values: tuple[float | None, ...]  # 12 entries; None marks "no data"


def severity_profiles(
    patients: tuple[PatientRecord, ...] | list[PatientRecord],
    symptoms: list[str] | None = None,
) -> list[SeverityProfile]:
    """Mean rating per (symptom, timepoint) over the selected patients."""
    chosen = list(symptoms) if symptoms is not None else list(SYMPTOMS)
    profiles = []
    for symptom in chosen:
        idx = SYMPTOM_INDEX[symptom]
        values: list[float | None] = []
        for t in range(N_TIMEPOINTS):
            present = [p.ratings[idx][t] for p in patients if p.ratings[idx][t] is not None]
            values.append(sum(present) / len(present) if present else None)
        profiles.append(SeverityProfile(symptom, tuple(values)))
    return profiles


def order_symptoms(
    profiles: list[SeverityProfile], anchor: str = "dryMouth"
) -> list[str]:
    """Anchor first, then descending cosine similarity of the 12-vectors
    (missing imputed as 0 for the vector only), ties alphabetical."""
    vectors = {
        p.symptom: np.array([v if v is not None else 0.0 for v in p.values])
        for p in profiles
    }
    if anchor not in vectors:
        raise ValueError(f"anchor {anchor!r} has no profile")
    anchor_vec = vectors[anchor]
    anchor_norm = float(np.linalg.norm(anchor_vec))
    if anchor_norm == 0.0:
        raise ValueError(f"anchor {anchor!r} has an all-zero profile")

    def similarity(symptom: str) -> float:
        vec = vectors[symptom]
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            return -1.0  # all-missing profiles sort after every real one
        return float(np.dot(anchor_vec, vec)) / (anchor_norm * norm)

    rest = sorted(
        (s for s in vectors if s != anchor), key=lambda s: (-similarity(s), s)
    )
    return [anchor] + rest


# ---------------------------------------------------------------------------
# Prevalence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrevalenceRow:
    symptom: str
    pct_acute: float
    pct_late: float
    in_cluster: bool


def prevalence_query(
    stratum: CohortTable,
    thresholds: Thresholds | None = None,
    t_stage: str | None = None,
    n_stage: str | None = None,
    clusters: list[RuleCluster] = (),
) -> list[PrevalenceRow]:
    """Fraction of patients exceeding the stage threshold at least once,
    per symptom, sorted by cumulative acute+late prevalence."""
    thresholds = thresholds or Thresholds()
    if t_stage is not None and t_stage not in T_STAGES:
        raise ValueError(f"unknown t_stage {t_stage!r}")
    if n_stage is not None and n_stage not in N_STAGES:
        raise ValueError(f"unknown n_stage {n_stage!r}")
    patients = [
        p
        for p in stratum.patients
        if (t_stage is None or p.t_stage == t_stage)
        and (n_stage is None or p.n_stage == n_stage)
    ]
    clustered: set[str] = set()
    for cluster in clusters:
        clustered |= cluster.acute_symptoms | cluster.late_symptoms

    n = len(patients)
    rows = []
    for symptom in SYMPTOMS:
        idx = SYMPTOM_INDEX[symptom]

        def exceeds(p: PatientRecord, stage: Stage, theta: int) -> bool:
            row = p.ratings[idx]
            return any(
                row[t] is not None and row[t] >= theta for t in timepoints_of(stage)
            )

        acute = sum(1 for p in patients if exceeds(p, Stage.ACUTE, thresholds.theta_acute))
        late = sum(1 for p in patients if exceeds(p, Stage.LATE, thresholds.theta_late))
        rows.append(
            PrevalenceRow(
                symptom=symptom,
                pct_acute=acute / n if n else 0.0,
                pct_late=late / n if n else 0.0,
                in_cluster=symptom in clustered,
            )
        )
    rows.sort(key=lambda r: (-(r.pct_acute + r.pct_late), r.symptom))
    return rows


# ---------------------------------------------------------------------------
# Projections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjectionPoint:
    entity_id: str
    x: float
    y: float
    clusters: tuple[int, ...] = ()
    acute_total: float | None = None
    late_total: float | None = None


@dataclass(frozen=True)
class LateSymptom:
    symptom: str
    predicted: bool  # False entries render low-emphasis


@dataclass(frozen=True)
class SymptomProjection:
    acute_points: tuple[ProjectionPoint, ...]
    late_symptoms: tuple[LateSymptom, ...]
    explained_variance: tuple[float, ...]
    collision_diameter: float


def symptom_jaccard_matrix(
    symptoms: list[str], sequences: list[PatientSequence]
) -> np.ndarray:
    """Jaccard similarity between symptoms by the acute-stage patients they share."""
    supporters = [
        frozenset(seq.patient_id for seq in sequences if s in seq.acute_set)
        for s in symptoms
    ]
    n = len(symptoms)
    matrix = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            union = supporters[i] | supporters[j]
            value = len(supporters[i] & supporters[j]) / len(union) if union else 0.0
            matrix[i, j] = matrix[j, i] = value
    return matrix


def symptom_projection(
    clusters: list[RuleCluster],
    sequences: list[PatientSequence],
    seed: int = 0,
    collision_diameter: float | None = None,
    unfiltered_rules: list[SequentialRule] = (),
) -> SymptomProjection:
    """Acute-half scatter (PCA of the symptom Jaccard matrix, then overlap
    removal) plus the late-half listing with unpredicted symptoms flagged.

    Unpredicted late symptoms are those whose every candidate rule failed the
    lift filter, recovered from the pre-filter rule set.
    """
    acute_symptoms = sorted(set().union(*(c.acute_symptoms for c in clusters)) if clusters else set())
    if len(acute_symptoms) < 2:
        raise ValueError("need at least two distinct acute symptoms to project")

    matrix = symptom_jaccard_matrix(acute_symptoms, sequences)
    pca = pca_projection(matrix)
    coords = pca_scores_2d(matrix)
    if collision_diameter is None:
        collision_diameter = default_collision_diameter(coords)
    coords = resolve_collisions(coords, collision_diameter, seed=seed)

    points = []
    for i, symptom in enumerate(acute_symptoms):
        memberships = tuple(
            c.cluster_id for c in clusters if symptom in c.acute_symptoms
        )
        points.append(
            ProjectionPoint(
                entity_id=symptom,
                x=float(coords[i, 0]),
                y=float(coords[i, 1]),
                clusters=memberships,
            )
        )

    predicted = sorted(set().union(*(c.late_symptoms for c in clusters)) if clusters else set())
    candidate_late = set()
    for rule in unfiltered_rules:
        candidate_late |= rule.consequent
    unpredicted = sorted(candidate_late - set(predicted))
    listing = tuple(
        [LateSymptom(s, True) for s in predicted]
        + [LateSymptom(s, False) for s in unpredicted]
    )
    return SymptomProjection(
        acute_points=tuple(points),
        late_symptoms=listing,
        explained_variance=tuple(float(v) for v in pca.explained_variance),
        collision_diameter=collision_diameter,
    )


def stage_total(
    record: PatientRecord, stage: Stage, symptoms: list[str] | None = None
) -> float:
    """Sum of present ratings over the stage's timepoints (raw sums, not means)."""
    chosen = symptoms if symptoms is not None else SYMPTOMS
    total = 0.0
    for symptom in chosen:
        row = record.ratings[SYMPTOM_INDEX[symptom]]
        total += sum(row[t] for t in timepoints_of(stage) if row[t] is not None)
    return total


def cluster_memberships(
    stratum: CohortTable, clusters: list[RuleCluster]
) -> dict[str, tuple[int, ...]]:
    by_patient: dict[str, list[int]] = {p.patient_id: [] for p in stratum.patients}
    for cluster in clusters:
        for pid in cluster.patients:
            if pid in by_patient:
                by_patient[pid].append(cluster.cluster_id)
    return {pid: tuple(sorted(ids)) for pid, ids in by_patient.items()}


def patient_projection(
    stratum: CohortTable,
    clusters: list[RuleCluster] = (),
    symptom_subset: list[str] | None = None,
    seed: int = 0,
    collision_diameter: float | None = None,
) -> list[ProjectionPoint]:
    """x = total acute severity, y = total late severity, with seeded overlap
    removal; metadata keeps cluster labels and the raw two-stage totals."""
    memberships = cluster_memberships(stratum, clusters)
    patients = sorted(stratum.patients, key=lambda p: p.patient_id)
    totals = [
        (
            stage_total(p, Stage.ACUTE, symptom_subset),
            stage_total(p, Stage.LATE, symptom_subset),
        )
        for p in patients
    ]
    coords = np.array(totals, dtype=float).reshape(len(patients), 2)
    if collision_diameter is None:
        collision_diameter = default_collision_diameter(coords)
    laid_out = resolve_collisions(coords, collision_diameter, seed=seed)
    return [
        ProjectionPoint(
            entity_id=p.patient_id,
            x=float(laid_out[i, 0]),
            y=float(laid_out[i, 1]),
            clusters=memberships[p.patient_id],
            acute_total=totals[i][0],
            late_total=totals[i][1],
        )
        for i, p in enumerate(patients)
    ]


# ---------------------------------------------------------------------------
# Burden tiers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BurdenTiers:
    assignments: dict[str, tuple[str, str]]  # patient_id -> (acute, late) tier
    acute_fallback: bool
    late_fallback: bool


def _tier_labels(values: np.ndarray, seed: int) -> tuple[list[str], bool]:
    """K-means tiers when the data supports k=3; quantile tiers otherwise."""
    if len(set(values.tolist())) >= 3:
        labels, _ = kmeans_1d(values, k=3, seed=seed)
        return [TIER_NAMES[int(c)] for c in labels], False
    q1, q2 = np.quantile(values, [1 / 3, 2 / 3])
    tiers = [
        TIER_NAMES[0] if v <= q1 else (TIER_NAMES[1] if v <= q2 else TIER_NAMES[2])
        for v in values
    ]
    return tiers, True


def burden_tiers(stratum: CohortTable, seed: int = 0) -> BurdenTiers:
    """Two independent k=3 clusterings of total acute / total late severity."""
    patients = sorted(stratum.patients, key=lambda p: p.patient_id)
    acute = np.array([stage_total(p, Stage.ACUTE) for p in patients])
    late = np.array([stage_total(p, Stage.LATE) for p in patients])
    acute_tiers, acute_fallback = _tier_labels(acute, seed)
    late_tiers, late_fallback = _tier_labels(late, seed)
    assignments = {
        p.patient_id: (acute_tiers[i], late_tiers[i]) for i, p in enumerate(patients)
    }
    return BurdenTiers(assignments, acute_fallback, late_fallback)


# ---------------------------------------------------------------------------
# Sankey flows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SankeyNode:
    label: str
    count: int
    patients: tuple[str, ...]


@dataclass(frozen=True)
class SankeyAxis:
    name: str
    nodes: tuple[SankeyNode, ...]


@dataclass(frozen=True)
class SankeyLink:
    source_axis: int
    source: str
    target: str
    count: int
    patients: tuple[str, ...]


@dataclass(frozen=True)
class SankeyGraph:
    axes: tuple[SankeyAxis, ...]
    links: tuple[SankeyLink, ...]


SANKEY_AXES = ("t_stage", "n_stage", "cluster_combination", "acute_tier", "late_tier")


def combo_label(cluster_ids: tuple[int, ...]) -> str:
    if not cluster_ids:
        return "none"
    return "+".join(f"c{cid}" for cid in sorted(cluster_ids))


def sankey_flows(
    stratum: CohortTable,
    memberships: dict[str, tuple[int, ...]],
    tiers: BurdenTiers,
) -> SankeyGraph:
    """Patient flow across [T stage, N stage, cluster combo, acute tier, late tier]."""
    patients = sorted(stratum.patients, key=lambda p: p.patient_id)
    for p in patients:
        if p.patient_id not in memberships or p.patient_id not in tiers.assignments:
            raise ValueError(f"patient {p.patient_id} lacks memberships or tiers")

    def axis_values(p: PatientRecord) -> tuple[str, str, str, str, str]:
        acute_tier, late_tier = tiers.assignments[p.patient_id]
        return (
            p.t_stage,
            p.n_stage,
            combo_label(memberships[p.patient_id]),
            acute_tier,
            late_tier,
        )

    rows = {p.patient_id: axis_values(p) for p in patients}

    def node_order(axis: int, label: str) -> tuple:
        if axis == 0:
            return (T_STAGES.index(label),)
        if axis == 1:
            return (N_STAGES.index(label),)
        if axis == 2:
            return (label == "none", label)  # named combos first, lexicographic
        return (TIER_NAMES.index(label),)

    axes = []
    for axis, name in enumerate(SANKEY_AXES):
        groups: dict[str, list[str]] = {}
        for pid, values in rows.items():
            groups.setdefault(values[axis], []).append(pid)
        nodes = tuple(
            SankeyNode(label, len(groups[label]), tuple(sorted(groups[label])))
            for label in sorted(groups, key=lambda lb: node_order(axis, lb))
        )
        axes.append(SankeyAxis(name, nodes))

    links = []
    for axis in range(len(SANKEY_AXES) - 1):
        groups: dict[tuple[str, str], list[str]] = {}
        for pid, values in rows.items():
            groups.setdefault((values[axis], values[axis + 1]), []).append(pid)
        for source, target in sorted(
            groups,
            key=lambda st: (node_order(axis, st[0]), node_order(axis + 1, st[1])),
        ):
            pids = groups[(source, target)]
            links.append(
                SankeyLink(axis, source, target, len(pids), tuple(sorted(pids)))
            )
    return SankeyGraph(tuple(axes), tuple(links))


# ---------------------------------------------------------------------------
# Patient timelines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TimelineBar:
    symptom: str
    acute_mean: float | None
    late_mean: float | None
    in_cluster: bool


@dataclass(frozen=True)
class TimelineRow:
    patient_id: str
    t_stage: str
    n_stage: str
    clusters: tuple[int, ...]
    bars: tuple[TimelineBar, ...]
    cumulative_severity: float


def patient_timeline(
    record: PatientRecord,
    ordering: list[str],
    clusters: list[RuleCluster] = (),
) -> TimelineRow:
    """Per-symptom acute/late mean ratings in anchor order, with cluster flags."""
    clustered: set[str] = set()
    membership: list[int] = []
    for cluster in clusters:
        clustered |= cluster.acute_symptoms | cluster.late_symptoms
        if record.patient_id in cluster.patients:
            membership.append(cluster.cluster_id)

    bars = []
    cumulative = 0.0
    for symptom in ordering:
        acute = record.present_ratings(symptom, Stage.ACUTE)
        late = record.present_ratings(symptom, Stage.LATE)
        acute_mean = sum(acute) / len(acute) if acute else None
        late_mean = sum(late) / len(late) if late else None
        cumulative += (acute_mean or 0.0) + (late_mean or 0.0)
        bars.append(
            TimelineBar(symptom, acute_mean, late_mean, symptom in clustered)
        )
    return TimelineRow(
        patient_id=record.patient_id,
        t_stage=record.t_stage,
        n_stage=record.n_stage,
        clusters=tuple(sorted(membership)),
        bars=tuple(bars),
        cumulative_severity=cumulative,
    )


def timeline_rows(
    stratum: CohortTable,
    ordering: list[str],
    clusters: list[RuleCluster] = (),
    patients: list[str] | None = None,
) -> list[TimelineRow]:
    """Rows sorted by descending cumulative severity, then cluster-membership
    count, then patient id for stability."""
    selected = stratum.patients
    if patients is not None:
        wanted = set(patients)
        selected = tuple(p for p in selected if p.patient_id in wanted)
    rows = [patient_timeline(p, ordering, clusters) for p in selected]
    rows.sort(key=lambda r: (-r.cumulative_severity, -len(r.clusters), r.patient_id))
    return rows
