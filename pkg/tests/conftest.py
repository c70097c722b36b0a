import random

import pytest

from seqsym.cohort import CohortTable, PatientRecord, make_ratings
from seqsym.sequences import PatientSequence

# F1: single treatment "CC", five patients. Acute members rated 7 at week 3,
# late members rated 4 at six months post (timepoint 9).
F1_ACUTE = {
    "P1": {"taste", "nausea"},
    "P2": {"taste", "nausea"},
    "P3": {"taste"},
    "P4": {"nausea"},
    "P5": {"taste", "nausea"},
}
F1_LATE = {
    "P1": {"dryMouth"},
    "P2": {"dryMouth"},
    "P3": {"dryMouth"},
    "P4": set(),
    "P5": {"dryMouth"},
}


def f1_patient(pid: str) -> PatientRecord:
    cells = {}
    for symptom in F1_ACUTE[pid]:
        cells[(symptom, 3)] = 7
    for symptom in F1_LATE[pid]:
        cells[(symptom, 9)] = 4
    return PatientRecord(
        patient_id=pid, treatment="CC", t_stage="T2", n_stage="N1",
        ratings=make_ratings(cells),
    )


@pytest.fixture
def f1_cohort() -> CohortTable:
    return CohortTable(
        tuple(f1_patient(pid) for pid in sorted(F1_ACUTE)), provenance="fixture:F1"
    )


@pytest.fixture
def f1_sequences() -> list[PatientSequence]:
    return [
        PatientSequence(pid, frozenset(F1_ACUTE[pid]), frozenset(F1_LATE[pid]))
        for pid in sorted(F1_ACUTE)
    ]


def f1_csv_files(tmp_path):
    clinical = tmp_path / "clinical.csv"
    ratings = tmp_path / "ratings.csv"
    clinical_rows = ["patient_id,treatment,t_stage,n_stage,age,dose"]
    rating_rows = ["patient_id,symptom,timepoint,rating"]
    for pid in sorted(F1_ACUTE):
        clinical_rows.append(f"{pid},CC,T2,N1,61,66.5")
        cells = sorted(
            [(symptom, 3, 7) for symptom in F1_ACUTE[pid]]
            + [(symptom, 9, 4) for symptom in F1_LATE[pid]]
        )
        for symptom, timepoint, rating in cells:
            rating_rows.append(f"{pid},{symptom},{timepoint},{rating}")
    clinical.write_text("\n".join(clinical_rows) + "\n")
    ratings.write_text("\n".join(rating_rows) + "\n")
    return str(clinical), str(ratings)


@pytest.fixture
def f1_files(tmp_path):
    return f1_csv_files(tmp_path)


# F2: pattern P = {taste, nausea} -> {dryMouth}; treatment A has 4 patients of
# which 2 support P, treatment B has 5 patients of which 1 supports P.
F2_PATTERN = (frozenset({"taste", "nausea"}), frozenset({"dryMouth"}))


@pytest.fixture
def f2_sequences():
    acute, late = F2_PATTERN
    inside = [
        PatientSequence("A1", acute, late),
        PatientSequence("A2", acute, late),
        PatientSequence("A3", frozenset({"taste"}), frozenset()),
        PatientSequence("A4", frozenset(), frozenset()),
    ]
    outside = [
        PatientSequence("B1", acute, late),
        PatientSequence("B2", frozenset({"nausea"}), frozenset()),
        PatientSequence("B3", frozenset(), frozenset({"dryMouth"})),
        PatientSequence("B4", frozenset(), frozenset()),
        PatientSequence("B5", frozenset(), frozenset()),
    ]
    return inside, outside


def random_sequences(
    rng: random.Random,
    max_patients: int = 12,
    max_symptoms: int = 6,
    min_patients: int = 1,
) -> list[PatientSequence]:
    """Small random stratum for oracle-equivalence and property tests."""
    n = rng.randint(min_patients, max_patients)
    n_symptoms = rng.randint(1, max_symptoms)
    alphabet = ["swallow", "speech", "mucus", "taste", "dryMouth", "nausea"][:n_symptoms]
    sequences = []
    for i in range(n):
        acute = frozenset(s for s in alphabet if rng.random() < 0.5)
        late = frozenset(s for s in alphabet if rng.random() < 0.4)
        sequences.append(PatientSequence(f"P{i:02d}", acute, late))
    return sequences
