"""Canonical symptom vocabulary, observation timepoints, and treatment labels.

Everything downstream (sequences, mining, analytics, serialization) keys off
the closed vocabulary defined here; comparisons are case-sensitive exact match.
"""

from __future__ import annotations

import enum

# 28 symptoms: disease-specific, general, and daily-life interference items.
HNC_SYMPTOMS = (
    "swallow", "speech", "mucus", "taste", "constipation",
    "teeth", "mouthSores", "choking", "skin",
)
GENERAL_SYMPTOMS = (
    "fatigue", "sleep", "distress", "pain", "drowsiness", "sadness",
    "memory", "numbness", "dryMouth", "appetite", "breath", "nausea", "vomit",
)
INTERFERENCE_SYMPTOMS = (
    "work", "enjoyment", "activity", "mood", "walking", "relations",
)

SYMPTOMS: tuple[str, ...] = HNC_SYMPTOMS + GENERAL_SYMPTOMS + INTERFERENCE_SYMPTOMS
SYMPTOM_INDEX: dict[str, int] = {name: i for i, name in enumerate(SYMPTOMS)}

RATING_MIN = 0
RATING_MAX = 10

# 12 observation timepoints: baseline + 7 treatment weeks, then 6 weeks and
# 6/12/18 months after treatment.
N_TIMEPOINTS = 12
ACUTE_TIMEPOINTS: tuple[int, ...] = tuple(range(0, 8))
LATE_TIMEPOINTS: tuple[int, ...] = (8, 9, 10, 11)


class Stage(str, enum.Enum):
    ACUTE = "acute"
    LATE = "late"


def stage_of(timepoint: int) -> Stage:
    if not 0 <= timepoint < N_TIMEPOINTS:
        raise ValueError(f"timepoint {timepoint} outside 0..{N_TIMEPOINTS - 1}")
    return Stage.ACUTE if timepoint <= 7 else Stage.LATE


def timepoints_of(stage: Stage) -> tuple[int, ...]:
    return ACUTE_TIMEPOINTS if stage is Stage.ACUTE else LATE_TIMEPOINTS


TREATMENTS: tuple[str, ...] = ("ICC", "CC", "IRT", "RT", "S_and_others", "S")

# Surgery-alone patients carry no weekly acute ratings and are kept out of
# rule mining (they remain visible in cohort summaries).
NON_MINABLE_TREATMENTS = frozenset({"S"})

UNSPECIFIED = "unspecified"
T_STAGES: tuple[str, ...] = ("T0", "T1", "T2", "T3", "T4", UNSPECIFIED)
N_STAGES: tuple[str, ...] = ("N0", "N1", "N2", "N3", UNSPECIFIED)
