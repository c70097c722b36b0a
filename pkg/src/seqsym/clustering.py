"""Collapse redundant rules into clusters via supporter-set Jaccard similarity
and complete-linkage agglomeration, then score each cluster within and across
treatment strata.

Distance is 1 - Jaccard. Merge ties break on the smallest (left id, right id)
pair, with new clusters numbered n, n+1, ... after the n leaves, so dendrograms
are reproducible regardless of library versions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .mining import SequentialRule
from .sequences import PatientSequence

UNBOUNDED = math.inf


@dataclass(frozen=True)
class RuleSimilarityMatrix:
    rule_count: int
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.rule_count:
            raise ValueError("similarity matrix shape mismatch")
        for i, row in enumerate(self.values):
            if len(row) != self.rule_count:
                raise ValueError("similarity matrix shape mismatch")
            if row[i] != 1.0:
                raise ValueError("similarity diagonal must be 1")
            for j, value in enumerate(row):
                if not 0.0 <= value <= 1.0:
                    raise ValueError("similarity entries must be in [0, 1]")
                if value != self.values[j][i]:
                    raise ValueError("similarity matrix must be symmetric")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


@dataclass(frozen=True)
class MergeStep:
    left: int
    right: int
    height: float
    size: int


@dataclass(frozen=True)
class Dendrogram:
    merges: tuple[MergeStep, ...]
    n_leaves: int


@dataclass(frozen=True)
class CutPolicy:
    """Either a fixed cluster count or a distance cut height; exactly one."""

    n_clusters: int | None = None
    height: float | None = None

    def __post_init__(self) -> None:
        if (self.n_clusters is None) == (self.height is None):
            raise ValueError("set exactly one of n_clusters / height")
        if self.height is not None and not 0.0 <= self.height <= 1.0:
            raise ValueError("cut height must be in [0, 1]")
        if self.n_clusters is not None and self.n_clusters < 1:
            raise ValueError("n_clusters must be >= 1")


@dataclass(frozen=True)
class RuleCluster:
    """Merged rule group: symptom-set unions, supporter union, three metrics."""

    cluster_id: int
    rule_indices: tuple[int, ...]
    acute_symptoms: frozenset[str]
    late_symptoms: frozenset[str]
    patients: tuple[str, ...]
    acute_support: float
    cluster_confidence: float | None
    cross_treatment_ratio: float
    degenerate: bool = False
    below_mining_threshold: bool = False


def _jaccard(a: frozenset, b: frozenset) -> float:
    if not a and not b:
        return 1.0
    union = len(a | b)
    return len(a & b) / union


def rule_similarity(rules: list[SequentialRule]) -> RuleSimilarityMatrix:
    """Pairwise Jaccard index of the rules' supporting-patient sets."""
    if not rules:
        raise ValueError("need at least one rule")
    supporter_sets = [frozenset(rule.supporters) for rule in rules]
    for rule, supporters in zip(rules, supporter_sets):
        if not supporters:
            raise ValueError(f"rule {sorted(rule.antecedent)} has no supporters")
    n = len(rules)
    values = [
        tuple(
            1.0 if i == j else _jaccard(supporter_sets[i], supporter_sets[j])
            for j in range(n)
        )
        for i in range(n)
    ]
    return RuleSimilarityMatrix(n, tuple(values))


def agglomerate(matrix: RuleSimilarityMatrix) -> Dendrogram:
    """Complete-linkage merges over distance = 1 - Jaccard.

    Pairwise distances live in the upper triangle of a (2n-1)-square array
    indexed by cluster id; row-major argmin realizes the smallest
    (left id, right id) tie-break exactly.
    """
    n = matrix.rule_count
    if n == 1:
        return Dendrogram((), 1)

    total = 2 * n - 1
    dist = np.full((total, total), np.inf)
    dist[:n, :n] = 1.0 - matrix.as_array()
    dist[np.tril_indices(n)] = np.inf

    sizes = {i: 1 for i in range(n)}
    merges: list[MergeStep] = []
    next_id = n
    while len(sizes) > 1:
        flat = int(np.argmin(dist))
        left, right = divmod(flat, total)
        height = float(dist[left, right])
        size = sizes.pop(left) + sizes.pop(right)
        merges.append(MergeStep(left, right, height, size))
        for other in sizes:
            towards_left = dist[min(left, other), max(left, other)]
            towards_right = dist[min(right, other), max(right, other)]
            # Complete linkage: distance to the merge is the max of the parts.
            dist[other, next_id] = max(towards_left, towards_right)
        dist[left, :] = dist[:, left] = np.inf
        dist[right, :] = dist[:, right] = np.inf
        sizes[next_id] = size
        next_id += 1
    return Dendrogram(tuple(merges), n)


def cut(dendrogram: Dendrogram, policy: CutPolicy) -> list[int]:
    """Cluster label per leaf; clusters numbered 0.. by their smallest member."""
    n = dendrogram.n_leaves
    if policy.n_clusters is not None:
        if not 1 <= policy.n_clusters <= n:
            raise ValueError(f"n_clusters {policy.n_clusters} outside 1..{n}")
        applied = dendrogram.merges[: n - policy.n_clusters]
    else:
        # Heights are non-decreasing, so the qualifying merges form a prefix.
        applied = tuple(
            itertools.takewhile(lambda m: m.height <= policy.height, dendrogram.merges)
        )

    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    next_id = n
    for merge in applied:
        members[next_id] = members.pop(merge.left) + members.pop(merge.right)
        next_id += 1

    groups = sorted((sorted(leaves) for leaves in members.values()), key=lambda g: g[0])
    labels = [0] * n
    for label, leaves in enumerate(groups):
        for leaf in leaves:
            labels[leaf] = label
    return labels


def _pattern_count(
    acute: frozenset[str], late: frozenset[str], sequences: list[PatientSequence]
) -> int:
    return sum(
        1 for seq in sequences if acute <= seq.acute_set and late <= seq.late_set
    )


def build_clusters(
    rules: list[SequentialRule],
    assignment: list[int],
    sequences: list[PatientSequence],
    other_sequences: list[PatientSequence] = (),
    min_support: float | None = None,
) -> list[RuleCluster]:
    """Merge member antecedents/consequents and recompute the merged pattern's
    metrics from the sequences (they are not derivable from member metrics).

    cross_treatment_ratio pools every other stratum's sequences; zero outside
    support is reported as the unbounded sentinel.
    """
    if len(assignment) != len(rules):
        raise ValueError("assignment must cover every rule")
    n = len(sequences)
    if n == 0:
        raise ValueError("need stratum sequences to score clusters")

    by_label: dict[int, list[int]] = {}
    for idx, label in enumerate(assignment):
        by_label.setdefault(label, []).append(idx)

    clusters: list[RuleCluster] = []
    for label in sorted(by_label):
        indices = tuple(sorted(by_label[label]))
        acute = frozenset().union(*(rules[i].antecedent for i in indices))
        late = frozenset().union(*(rules[i].consequent for i in indices))
        patients: set[str] = set()
        for i in indices:
            patients.update(rules[i].supporters)

        acute_count = sum(1 for seq in sequences if acute <= seq.acute_set)
        joint_count = _pattern_count(acute, late, sequences)
        acute_support = acute_count / n
        degenerate = acute_count == 0
        confidence = None if degenerate else joint_count / acute_count

        inside = joint_count / n
        outside_count = _pattern_count(acute, late, list(other_sequences))
        if not other_sequences or outside_count == 0:
            ratio = UNBOUNDED
        else:
            ratio = inside / (outside_count / len(other_sequences))

        clusters.append(
            RuleCluster(
                cluster_id=label + 1,
                rule_indices=indices,
                acute_symptoms=acute,
                late_symptoms=late,
                patients=tuple(sorted(patients)),
                acute_support=acute_support,
                cluster_confidence=confidence,
                cross_treatment_ratio=ratio,
                degenerate=degenerate,
                below_mining_threshold=(
                    min_support is not None and inside < min_support
                ),
            )
        )
    return clusters


class RuleClusterer(BaseEstimator):
    """Estimator wrapper: fit on rules, expose similarity_, dendrogram_, labels_."""

    def __init__(self, cut_height: float | None = 0.5, n_clusters: int | None = None):
        self.cut_height = cut_height
        self.n_clusters = n_clusters

    def _policy(self) -> CutPolicy:
        if self.n_clusters is not None:
            return CutPolicy(n_clusters=self.n_clusters)
        return CutPolicy(height=self.cut_height)

    def fit(self, X: list[SequentialRule], y=None) -> "RuleClusterer":
        self.similarity_ = rule_similarity(X)
        self.dendrogram_ = agglomerate(self.similarity_)
        self.labels_ = cut(self.dendrogram_, self._policy())
        return self

    def fit_predict(self, X: list[SequentialRule], y=None) -> list[int]:
        return self.fit(X).labels_

    @property
    def n_clusters_(self) -> int:
        if not hasattr(self, "labels_"):
            raise NotFittedError("RuleClusterer is not fitted")
        return len(set(self.labels_))
