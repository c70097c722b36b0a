"""Discretize 12-timepoint rating matrices into two-itemset patient sequences.

A symptom enters a stage's itemset iff some present rating at a timepoint of
that stage is >= the stage threshold; missing ratings never qualify.
"""

from __future__ import annotations

from dataclasses import dataclass

from sklearn.base import BaseEstimator, TransformerMixin

from .cohort import CohortTable, PatientRecord
from .vocab import RATING_MAX, RATING_MIN, SYMPTOM_INDEX, SYMPTOMS, Stage, timepoints_of


@dataclass(frozen=True)
class Thresholds:
    """Stage severity bounds; acute defaults to moderate-to-high, late to mild."""

    theta_acute: int = 5
    theta_late: int = 3

    def __post_init__(self) -> None:
        for theta in (self.theta_acute, self.theta_late):
            if not RATING_MIN <= theta <= RATING_MAX:
                raise ValueError(
                    f"threshold {theta} outside {RATING_MIN}..{RATING_MAX}"
                )

    def for_stage(self, stage: Stage) -> int:
        return self.theta_acute if stage is Stage.ACUTE else self.theta_late


@dataclass(frozen=True)
class PatientSequence:
    """One patient reduced to (acute symptom set, late symptom set)."""

    patient_id: str
    acute_set: frozenset[str]
    late_set: frozenset[str]

    def stage_set(self, stage: Stage) -> frozenset[str]:
        return self.acute_set if stage is Stage.ACUTE else self.late_set


def stage_itemset(record: PatientRecord, stage: Stage, threshold: int) -> frozenset[str]:
    if not RATING_MIN <= threshold <= RATING_MAX:
        raise ValueError(f"threshold {threshold} outside {RATING_MIN}..{RATING_MAX}")
    timepoints = timepoints_of(stage)
    members = []
    for symptom in SYMPTOMS:
        row = record.ratings[SYMPTOM_INDEX[symptom]]
        if any(row[t] is not None and row[t] >= threshold for t in timepoints):
            members.append(symptom)
    return frozenset(members)


def build_sequences(
    stratum: CohortTable, thresholds: Thresholds | None = None
) -> list[PatientSequence]:
    """One sequence per patient, ordered by patient_id; empty sequences kept.

    Patients with both stage sets empty still count toward the sequence total,
    so support denominators stay honest.
    """
    if not stratum.patients:
        raise ValueError("stratum is empty")
    thresholds = thresholds or Thresholds()
    return [
        PatientSequence(
            patient_id=record.patient_id,
            acute_set=stage_itemset(record, Stage.ACUTE, thresholds.theta_acute),
            late_set=stage_itemset(record, Stage.LATE, thresholds.theta_late),
        )
        for record in sorted(stratum.patients, key=lambda p: p.patient_id)
    ]


class SequenceBuilder(BaseEstimator, TransformerMixin):
    """Stateless transformer from cohort tables to patient sequences."""

    def __init__(self, theta_acute: int = 5, theta_late: int = 3):
        self.theta_acute = theta_acute
        self.theta_late = theta_late

    def fit(self, X: CohortTable, y=None) -> "SequenceBuilder":
        return self

    def transform(self, X: CohortTable) -> list[PatientSequence]:
        return build_sequences(X, Thresholds(self.theta_acute, self.theta_late))
