"""Cohort model: patient records, CSV ingestion/emission, stratification,
and a deterministic synthetic-cohort generator with planted sequential patterns.

File formats (see also the writer, which emits them bit-stably):
  clinical CSV:  patient_id,treatment,t_stage,n_stage,age,dose
  ratings CSV:   patient_id,symptom,timepoint,rating   (long format, one row
                 per present rating; absent cells are simply absent rows)
Empty clinical fields mean missing/unspecified.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass

from .vocab import (
    ACUTE_TIMEPOINTS,
    N_STAGES,
    N_TIMEPOINTS,
    RATING_MAX,
    RATING_MIN,
    SYMPTOM_INDEX,
    SYMPTOMS,
    T_STAGES,
    TREATMENTS,
    UNSPECIFIED,
    Stage,
    timepoints_of,
)

CLINICAL_HEADER = ["patient_id", "treatment", "t_stage", "n_stage", "age", "dose"]
RATINGS_HEADER = ["patient_id", "symptom", "timepoint", "rating"]

Ratings = tuple[tuple[int | None, ...], ...]


class CohortError(ValueError):
    """Malformed or inconsistent cohort input."""


def make_ratings(cells: dict[tuple[str, int], int] | None = None) -> Ratings:
    """Build an immutable 28x12 ratings matrix from {(symptom, timepoint): rating}."""
    rows = [[None] * N_TIMEPOINTS for _ in SYMPTOMS]
    for (symptom, timepoint), rating in (cells or {}).items():
        rows[SYMPTOM_INDEX[symptom]][timepoint] = rating
    return tuple(tuple(r) for r in rows)


_EMPTY_RATINGS = make_ratings()


@dataclass(frozen=True)
class PatientRecord:
    """One patient: treatment, diagnosis ordinals, and the 28x12 rating matrix."""

    patient_id: str
    treatment: str
    t_stage: str = UNSPECIFIED
    n_stage: str = UNSPECIFIED
    age: float | None = None
    dose: float | None = None
    ratings: Ratings = _EMPTY_RATINGS

    def __post_init__(self) -> None:
        if not self.patient_id:
            raise CohortError("patient_id must be non-empty")
        if self.treatment not in TREATMENTS:
            raise CohortError(f"unknown treatment {self.treatment!r}")
        if self.t_stage not in T_STAGES:
            raise CohortError(f"unknown t_stage {self.t_stage!r}")
        if self.n_stage not in N_STAGES:
            raise CohortError(f"unknown n_stage {self.n_stage!r}")
        if len(self.ratings) != len(SYMPTOMS):
            raise CohortError("ratings matrix must have 28 symptom rows")
        for row in self.ratings:
            if len(row) != N_TIMEPOINTS:
                raise CohortError("ratings matrix must have 12 timepoint columns")
            for value in row:
                if value is not None and not (RATING_MIN <= value <= RATING_MAX):
                    raise CohortError(
                        f"rating {value} outside {RATING_MIN}..{RATING_MAX}"
                    )

    def rating(self, symptom: str, timepoint: int) -> int | None:
        return self.ratings[SYMPTOM_INDEX[symptom]][timepoint]

    def present_ratings(self, symptom: str, stage: Stage) -> list[int]:
        row = self.ratings[SYMPTOM_INDEX[symptom]]
        return [row[t] for t in timepoints_of(stage) if row[t] is not None]

    def has_stage_data(self, stage: Stage) -> bool:
        timepoints = timepoints_of(stage)
        return any(
            row[t] is not None for row in self.ratings for t in timepoints
        )


@dataclass(frozen=True)
class CohortTable:
    """Immutable collection of patient records plus a provenance tag."""

    patients: tuple[PatientRecord, ...]
    provenance: str = ""

    def __len__(self) -> int:
        return len(self.patients)

    def by_id(self) -> dict[str, PatientRecord]:
        return {p.patient_id: p for p in self.patients}


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...]
    warnings: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def _parse_optional_float(raw: str, what: str, where: str) -> float | None:
    if raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise CohortError(f"{where}: {what} {raw!r} is not a number") from None


def load_cohort(clinical_path: str, ratings_path: str) -> CohortTable:
    """Load a cohort from the two CSV files, rejecting malformed rows by number.

    Every rating present in the file must be an integer in 0..10 against a
    known symptom/timepoint; duplicate (patient, symptom, timepoint) rows are
    collisions and rejected.
    """
    clinical: dict[str, dict] = {}
    with open(clinical_path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != CLINICAL_HEADER:
            raise CohortError(
                f"{clinical_path}: expected header {','.join(CLINICAL_HEADER)}"
            )
        for row_no, row in enumerate(reader, start=2):
            where = f"{clinical_path} row {row_no}"
            if len(row) != len(CLINICAL_HEADER):
                raise CohortError(f"{where}: expected {len(CLINICAL_HEADER)} fields")
            pid, treatment, t_stage, n_stage, age, dose = (v.strip() for v in row)
            if not pid:
                raise CohortError(f"{where}: empty patient_id")
            if pid in clinical:
                raise CohortError(f"{where}: duplicate patient_id {pid!r}")
            if treatment not in TREATMENTS:
                raise CohortError(f"{where}: unknown treatment {treatment!r}")
            t_stage = t_stage or UNSPECIFIED
            n_stage = n_stage or UNSPECIFIED
            if t_stage not in T_STAGES:
                raise CohortError(f"{where}: unknown t_stage {t_stage!r}")
            if n_stage not in N_STAGES:
                raise CohortError(f"{where}: unknown n_stage {n_stage!r}")
            clinical[pid] = {
                "treatment": treatment,
                "t_stage": t_stage,
                "n_stage": n_stage,
                "age": _parse_optional_float(age, "age", where),
                "dose": _parse_optional_float(dose, "dose", where),
            }
    if not clinical:
        raise CohortError(f"{clinical_path}: no patients")

    cells: dict[str, dict[tuple[str, int], int]] = {pid: {} for pid in clinical}
    with open(ratings_path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != RATINGS_HEADER:
            raise CohortError(
                f"{ratings_path}: expected header {','.join(RATINGS_HEADER)}"
            )
        for row_no, row in enumerate(reader, start=2):
            where = f"{ratings_path} row {row_no}"
            if len(row) != len(RATINGS_HEADER):
                raise CohortError(f"{where}: expected {len(RATINGS_HEADER)} fields")
            pid, symptom, timepoint_raw, rating_raw = (v.strip() for v in row)
            if pid not in cells:
                raise CohortError(f"{where}: unknown patient_id {pid!r}")
            if symptom not in SYMPTOM_INDEX:
                raise CohortError(f"{where}: unknown symptom {symptom!r}")
            try:
                timepoint = int(timepoint_raw)
            except ValueError:
                raise CohortError(
                    f"{where}: timepoint {timepoint_raw!r} is not an integer"
                ) from None
            if not 0 <= timepoint < N_TIMEPOINTS:
                raise CohortError(
                    f"{where}: timepoint {timepoint} outside 0..{N_TIMEPOINTS - 1}"
                )
            try:
                # The rating scale is integer-valued; fractional ratings are rejected.
                rating = int(rating_raw)
            except ValueError:
                raise CohortError(
                    f"{where}: rating {rating_raw!r} is not an integer"
                ) from None
            if not RATING_MIN <= rating <= RATING_MAX:
                raise CohortError(
                    f"{where}: rating {rating} outside {RATING_MIN}..{RATING_MAX}"
                )
            key = (symptom, timepoint)
            if key in cells[pid]:
                raise CohortError(
                    f"{where}: duplicate rating for ({pid}, {symptom}, {timepoint})"
                )
            cells[pid][key] = rating

    patients = tuple(
        PatientRecord(
            patient_id=pid,
            ratings=make_ratings(cells[pid]),
            **clinical[pid],
        )
        for pid in sorted(clinical)
    )
    return CohortTable(patients, provenance=f"csv:{clinical_path}")


def write_cohort(cohort: CohortTable, clinical_path: str, ratings_path: str) -> None:
    """Emit the two CSVs bit-stably, sorted by (patient_id, symptom, timepoint)."""

    def fmt(value: float | None) -> str:
        return "" if value is None else format(value, "g")

    patients = sorted(cohort.patients, key=lambda p: p.patient_id)
    with open(clinical_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CLINICAL_HEADER)
        for p in patients:
            writer.writerow([
                p.patient_id,
                p.treatment,
                "" if p.t_stage == UNSPECIFIED else p.t_stage,
                "" if p.n_stage == UNSPECIFIED else p.n_stage,
                fmt(p.age),
                fmt(p.dose),
            ])
    with open(ratings_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(RATINGS_HEADER)
        for p in patients:
            rows = []
            for symptom in SYMPTOMS:
                row = p.ratings[SYMPTOM_INDEX[symptom]]
                for timepoint in range(N_TIMEPOINTS):
                    if row[timepoint] is not None:
                        rows.append((symptom, timepoint, row[timepoint]))
            rows.sort()
            for symptom, timepoint, rating in rows:
                writer.writerow([p.patient_id, symptom, timepoint, rating])


def validate_cohort(cohort: CohortTable) -> ValidationReport:
    """Report-only consistency pass: duplicate ids, missing stages, unrated symptoms."""
    errors: list[str] = []
    warnings: list[str] = []

    seen: set[str] = set()
    for p in cohort.patients:
        if p.patient_id in seen:
            errors.append(f"duplicate patient_id {p.patient_id!r}")
        seen.add(p.patient_id)

    for p in cohort.patients:
        if not p.has_stage_data(Stage.ACUTE):
            warnings.append(f"patient {p.patient_id}: no reported acute-stage ratings")
        if not p.has_stage_data(Stage.LATE):
            warnings.append(f"patient {p.patient_id}: no reported late-stage ratings")

    for symptom in SYMPTOMS:
        idx = SYMPTOM_INDEX[symptom]
        if not any(
            v is not None for p in cohort.patients for v in p.ratings[idx]
        ):
            warnings.append(f"symptom {symptom}: never rated in this cohort")

    return ValidationReport(tuple(errors), tuple(warnings))


def stratify_by_treatment(cohort: CohortTable) -> dict[str, CohortTable]:
    """Partition by treatment label; empty strata are absent, not empty tables."""
    groups: dict[str, list[PatientRecord]] = {}
    for p in cohort.patients:
        groups.setdefault(p.treatment, []).append(p)
    return {
        treatment: CohortTable(
            tuple(sorted(patients, key=lambda p: p.patient_id)),
            provenance=f"{cohort.provenance}|treatment={treatment}",
        )
        for treatment, patients in sorted(groups.items())
    }


# ---------------------------------------------------------------------------
# Synthetic cohorts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlantedPattern:
    """An acute-set -> late-set pattern planted into a fraction of one stratum."""

    treatment: str
    acute: frozenset[str]
    late: frozenset[str]
    penetrance: float

    def __post_init__(self) -> None:
        if self.treatment not in TREATMENTS:
            raise CohortError(f"unknown treatment {self.treatment!r}")
        if not self.acute or not self.late:
            raise CohortError("planted pattern needs non-empty acute and late sets")
        for symptom in self.acute | self.late:
            if symptom not in SYMPTOM_INDEX:
                raise CohortError(f"unknown symptom {symptom!r}")
        if not 0.0 <= self.penetrance <= 1.0:
            raise CohortError("penetrance must be in [0, 1]")


@dataclass(frozen=True)
class SyntheticSpec:
    """Desk-scale ground truth: per-treatment counts plus planted patterns.

    Patterns are planted at the sequence level and realized as ratings at one
    uniformly chosen timepoint per stage; noise adds above-threshold ratings
    cell-wise at the noise rate, and missingness blanks non-planted cells.
    """

    counts: dict[str, int]
    patterns: tuple[PlantedPattern, ...] = ()
    noise: float = 0.0
    missingness: float = 0.0
    seed: int = 0
    theta_acute: int = 5
    theta_late: int = 3

    def __post_init__(self) -> None:
        if not self.counts:
            raise CohortError("counts must name at least one treatment")
        for treatment, n in self.counts.items():
            if treatment not in TREATMENTS:
                raise CohortError(f"unknown treatment {treatment!r}")
            if n <= 0:
                raise CohortError(f"count for {treatment} must be positive")
        for rate, name in ((self.noise, "noise"), (self.missingness, "missingness")):
            if not 0.0 <= rate <= 1.0:
                raise CohortError(f"{name} must be in [0, 1]")
        for pattern in self.patterns:
            if pattern.treatment not in self.counts:
                raise CohortError(
                    f"pattern treatment {pattern.treatment!r} has no patient count"
                )
        for theta in (self.theta_acute, self.theta_late):
            if not RATING_MIN <= theta <= RATING_MAX:
                raise CohortError("thresholds must be in 0..10")


def generate_synthetic_cohort(spec: SyntheticSpec) -> CohortTable:
    """Deterministic synthetic cohort; identical spec (incl. seed) -> identical table."""
    rng = random.Random(spec.seed)

    stratum_ids: dict[str, list[str]] = {}
    clinical: dict[str, dict] = {}
    for treatment in sorted(spec.counts):
        n = spec.counts[treatment]
        ids = [f"{treatment}-{i:04d}" for i in range(n)]
        stratum_ids[treatment] = ids
        for pid in ids:
            clinical[pid] = {
                "treatment": treatment,
                "t_stage": rng.choice(T_STAGES),
                "n_stage": rng.choice(N_STAGES),
                "age": float(rng.randint(35, 85)),
                "dose": round(rng.uniform(50.0, 72.0), 1),
            }

    theta = {Stage.ACUTE: spec.theta_acute, Stage.LATE: spec.theta_late}
    cells: dict[str, dict[tuple[str, int], int]] = {pid: {} for pid in clinical}
    planted: set[tuple[str, str, int]] = set()

    for pattern in spec.patterns:
        ids = stratum_ids[pattern.treatment]
        # Guard against binary wobble in penetrance * n (e.g. 0.29 * 100).
        k = math.floor(pattern.penetrance * len(ids) + 1e-9)
        chosen = sorted(rng.sample(range(len(ids)), k))
        for idx in chosen:
            pid = ids[idx]
            for stage, symptoms in (
                (Stage.ACUTE, pattern.acute),
                (Stage.LATE, pattern.late),
            ):
                for symptom in sorted(symptoms):
                    timepoint = rng.choice(timepoints_of(stage))
                    cells[pid][(symptom, timepoint)] = rng.randint(
                        theta[stage], RATING_MAX
                    )
                    planted.add((pid, symptom, timepoint))

    if spec.noise > 0.0:
        for treatment in sorted(stratum_ids):
            for pid in stratum_ids[treatment]:
                for symptom in SYMPTOMS:
                    for timepoint in range(N_TIMEPOINTS):
                        if rng.random() >= spec.noise:
                            continue
                        if (pid, symptom, timepoint) in planted:
                            continue
                        stage = (
                            Stage.ACUTE
                            if timepoint in ACUTE_TIMEPOINTS
                            else Stage.LATE
                        )
                        cells[pid][(symptom, timepoint)] = rng.randint(
                            theta[stage], RATING_MAX
                        )

    if spec.missingness > 0.0:
        for pid in sorted(cells):
            for key in sorted(cells[pid]):
                symptom, timepoint = key
                if (pid, symptom, timepoint) in planted:
                    continue
                if rng.random() < spec.missingness:
                    del cells[pid][key]

    patients = tuple(
        PatientRecord(patient_id=pid, ratings=make_ratings(cells[pid]), **clinical[pid])
        for pid in sorted(clinical)
    )
    return CohortTable(patients, provenance=f"synthetic:seed={spec.seed}")
