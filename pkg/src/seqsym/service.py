"""Stateless HTTP facade over the mining and analytics pipeline.

After the cohort loads, every endpoint is a pure function of (cohort, request,
seed). Mining runs on demand per (treatment, params, thresholds) behind a
synchronized memo so analysts can sweep thresholds interactively; cluster and
analytics endpoints read the latest mined/clustered state for their treatment
and answer 409 until it exists.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import serialize
from .analytics import (
    burden_tiers,
    cluster_memberships,
    order_symptoms,
    patient_projection,
    prevalence_query,
    sankey_flows,
    severity_profiles,
    symptom_projection,
    timeline_rows,
)
from .clustering import CutPolicy, RuleCluster, agglomerate, build_clusters, cut, rule_similarity
from .cohort import (
    CohortError,
    CohortTable,
    SyntheticSpec,
    generate_synthetic_cohort,
    load_cohort,
    stratify_by_treatment,
    validate_cohort,
)
from .mining import MiningParams, SequentialRule, mine_rules
from .sequences import PatientSequence, Thresholds, build_sequences
from .vocab import NON_MINABLE_TREATMENTS, SYMPTOMS


@dataclass(frozen=True)
class SessionConfig:
    """Exactly one data source (CSV pair or synthetic spec) plus defaults."""

    clinical_path: str | None = None
    ratings_path: str | None = None
    synthetic: SyntheticSpec | None = None
    params: MiningParams | None = None  # None -> per-stratum support default
    thresholds: Thresholds = Thresholds()
    seed: int = 0

    def __post_init__(self) -> None:
        has_files = self.clinical_path is not None and self.ratings_path is not None
        if has_files == (self.synthetic is not None):
            raise ValueError("configure exactly one data source")

    def load(self) -> CohortTable:
        if self.synthetic is not None:
            return generate_synthetic_cohort(self.synthetic)
        return load_cohort(self.clinical_path, self.ratings_path)


@dataclass(frozen=True)
class MinedStratum:
    treatment: str
    params: MiningParams
    thresholds: Thresholds
    sequences: tuple[PatientSequence, ...]
    rules: tuple[SequentialRule, ...]
    candidates: tuple[SequentialRule, ...]


@dataclass(frozen=True)
class ClusteredStratum:
    mined: MinedStratum
    policy: CutPolicy
    clusters: tuple[RuleCluster, ...]


class MineRequest(BaseModel):
    treatment: str
    thresholds: dict = Field(default_factory=dict)
    params: dict = Field(default_factory=dict)


class ClusterRequest(BaseModel):
    treatment: str
    cut_height: float | None = None
    n_clusters: int | None = None


class AnalysisSession:
    """Loaded cohort plus the synchronized mining/clustering memo."""

    def __init__(self, config: SessionConfig):
        self.config = config
        self.cohort = config.load()
        report = validate_cohort(self.cohort)
        if not report.ok:
            raise CohortError("; ".join(report.errors))
        self.strata = stratify_by_treatment(self.cohort)
        self._lock = threading.Lock()
        self._mined: dict[tuple, MinedStratum] = {}
        self._latest_mined: dict[str, MinedStratum] = {}
        self._latest_clustered: dict[str, ClusteredStratum] = {}

    # -- helpers -----------------------------------------------------------

    def stratum(self, treatment: str) -> CohortTable:
        if treatment not in self.strata:
            raise HTTPException(404, f"unknown treatment {treatment!r}")
        return self.strata[treatment]

    def effective_params(self, treatment: str, overrides: dict) -> MiningParams:
        overrides = {k: v for k, v in overrides.items() if v is not None}
        if self.config.params is not None:
            return replace(self.config.params, **overrides)
        n = len(self.stratum(treatment))
        try:
            return MiningParams.for_stratum(n, **overrides)
        except TypeError as exc:
            raise HTTPException(422, f"bad mining params: {exc}") from exc

    def effective_thresholds(self, overrides: dict) -> Thresholds:
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(self.config.thresholds, **overrides)

    def mine(
        self, treatment: str, params: MiningParams, thresholds: Thresholds
    ) -> MinedStratum:
        if treatment in NON_MINABLE_TREATMENTS:
            raise HTTPException(409, f"treatment {treatment!r} is excluded from mining")
        stratum = self.stratum(treatment)
        key = (treatment, params, thresholds)
        with self._lock:
            cached = self._mined.get(key)
        if cached is None:
            sequences = tuple(build_sequences(stratum, thresholds))
            candidates, rules = mine_rules(list(sequences), params)
            cached = MinedStratum(
                treatment=treatment,
                params=params,
                thresholds=thresholds,
                sequences=sequences,
                rules=tuple(rules),
                candidates=tuple(candidates),
            )
        with self._lock:
            self._mined.setdefault(key, cached)
            self._latest_mined[treatment] = cached
        return cached

    def latest_mined(self, treatment: str) -> MinedStratum:
        self.stratum(treatment)
        with self._lock:
            mined = self._latest_mined.get(treatment)
        if mined is None:
            raise HTTPException(409, f"treatment {treatment!r} not yet mined")
        return mined

    def latest_clustered(self, treatment: str) -> ClusteredStratum:
        self.stratum(treatment)
        with self._lock:
            clustered = self._latest_clustered.get(treatment)
        if clustered is None:
            raise HTTPException(409, f"treatment {treatment!r} not yet clustered")
        return clustered

    def latest_clusters_or_empty(self, treatment: str) -> list[RuleCluster]:
        with self._lock:
            clustered = self._latest_clustered.get(treatment)
        return list(clustered.clusters) if clustered else []

    def other_sequences(self, treatment: str, thresholds: Thresholds) -> list:
        """Pooled sequences of every other minable stratum, same thresholds."""
        pooled = []
        for other, stratum in self.strata.items():
            if other == treatment or other in NON_MINABLE_TREATMENTS:
                continue
            pooled.extend(build_sequences(stratum, thresholds))
        return pooled

    def cluster(self, treatment: str, policy: CutPolicy) -> ClusteredStratum:
        mined = self.latest_mined(treatment)
        if not mined.rules:
            raise HTTPException(409, f"treatment {treatment!r} mined no rules to cluster")
        labels = cut(agglomerate(rule_similarity(list(mined.rules))), policy)
        clusters = build_clusters(
            list(mined.rules),
            labels,
            list(mined.sequences),
            self.other_sequences(treatment, mined.thresholds),
            min_support=mined.params.min_support,
        )
        clustered = ClusteredStratum(mined, policy, tuple(clusters))
        with self._lock:
            self._latest_clustered[treatment] = clustered
        return clustered

    def predicted_symptoms(self) -> list[str]:
        """Symptoms in any served cluster across treatments (anchor-row flags)."""
        with self._lock:
            clustered = list(self._latest_clustered.values())
        predicted: set[str] = set()
        for entry in clustered:
            for cluster in entry.clusters:
                predicted |= cluster.acute_symptoms | cluster.late_symptoms
        return sorted(predicted)


def _mine_payload(mined: MinedStratum, filtered: bool) -> dict:
    rules = mined.rules if filtered else mined.candidates
    return {
        "treatment": mined.treatment,
        "params": serialize.params_payload(mined.params),
        "thresholds": serialize.thresholds_payload(mined.thresholds),
        "n_sequences": len(mined.sequences),
        "filtered": filtered,
        "rules": [serialize.rule_payload(r) for r in rules],
        "unfiltered_rule_count": len(mined.candidates),
    }


def _clusters_payload(clustered: ClusteredStratum) -> dict:
    return {
        "treatment": clustered.mined.treatment,
        "params": serialize.params_payload(clustered.mined.params),
        "thresholds": serialize.thresholds_payload(clustered.mined.thresholds),
        "cut_policy": serialize.cut_policy_payload(clustered.policy),
        "clusters": [serialize.cluster_payload(c) for c in clustered.clusters],
    }


def create_app(config: SessionConfig) -> FastAPI:
    session = AnalysisSession(config)
    app = FastAPI(title="seqsym", version="0.1.0")
    app.state.session = session

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/treatments")
    def treatments():
        return {
            "treatments": [
                {
                    "treatment": treatment,
                    "size": len(stratum),
                    "minable": treatment not in NON_MINABLE_TREATMENTS,
                }
                for treatment, stratum in session.strata.items()
            ]
        }

    @app.get("/cohort/summary")
    def cohort_summary():
        return {
            "patients": len(session.cohort),
            "treatments": {t: len(s) for t, s in session.strata.items()},
            "symptoms": list(SYMPTOMS),
            "timepoints": 12,
            "provenance": session.cohort.provenance,
        }

    @app.post("/mine")
    def mine(request: MineRequest):
        try:
            params = session.effective_params(request.treatment, request.params)
            thresholds = session.effective_thresholds(request.thresholds)
        except (TypeError, ValueError) as exc:
            raise HTTPException(422, str(exc)) from exc
        mined = session.mine(request.treatment, params, thresholds)
        return _mine_payload(mined, filtered=True)

    @app.get("/rules")
    def rules(treatment: str, filtered: bool = True):
        return _mine_payload(session.latest_mined(treatment), filtered=filtered)

    @app.post("/clusters")
    def clusters(request: ClusterRequest):
        try:
            if request.n_clusters is not None:
                policy = CutPolicy(n_clusters=request.n_clusters)
            else:
                height = 0.5 if request.cut_height is None else request.cut_height
                policy = CutPolicy(height=height)
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        try:
            clustered = session.cluster(request.treatment, policy)
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        return _clusters_payload(clustered)

    @app.get("/clusters")
    def clusters_latest(treatment: str):
        return _clusters_payload(session.latest_clustered(treatment))

    @app.get("/profiles")
    def profiles(treatment: str | None = None, symptoms: str | None = None):
        if treatment is None:
            patients = list(session.cohort.patients)
        else:
            patients = list(session.stratum(treatment).patients)
        subset = symptoms.split(",") if symptoms else None
        if subset:
            unknown = [s for s in subset if s not in SYMPTOMS]
            if unknown:
                raise HTTPException(422, f"unknown symptoms {unknown}")
        all_profiles = severity_profiles(patients)
        try:
            ordering = order_symptoms(all_profiles)
        except ValueError:
            ordering = list(SYMPTOMS)  # sparse cohort without anchor data
        chosen = all_profiles if subset is None else [
            p for p in all_profiles if p.symptom in set(subset)
        ]
        return {
            "treatment": treatment,
            "profiles": [serialize.profile_payload(p) for p in chosen],
            "ordering": ordering,
            "predicted": session.predicted_symptoms(),
        }

    @app.get("/prevalence")
    def prevalence(
        treatment: str,
        theta_acute: int | None = None,
        theta_late: int | None = None,
        t_stage: str | None = None,
        n_stage: str | None = None,
    ):
        stratum = session.stratum(treatment)
        try:
            thresholds = session.effective_thresholds(
                {"theta_acute": theta_acute, "theta_late": theta_late}
            )
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        clusters = session.latest_clusters_or_empty(treatment)
        try:
            rows = prevalence_query(
                stratum, thresholds, t_stage=t_stage, n_stage=n_stage, clusters=clusters
            )
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        return {
            "treatment": treatment,
            "thresholds": serialize.thresholds_payload(thresholds),
            "t_stage": t_stage,
            "n_stage": n_stage,
            "rows": [serialize.prevalence_payload(r) for r in rows],
        }

    @app.get("/projection/symptoms")
    def projection_symptoms(treatment: str, seed: int | None = None):
        clustered = session.latest_clustered(treatment)
        effective_seed = session.config.seed if seed is None else seed
        try:
            projection = symptom_projection(
                list(clustered.clusters),
                list(clustered.mined.sequences),
                seed=effective_seed,
                unfiltered_rules=list(clustered.mined.candidates),
            )
        except ValueError as exc:
            raise HTTPException(409, str(exc)) from exc
        return {
            "treatment": treatment,
            "seed": effective_seed,
            "projection": serialize.symptom_projection_payload(projection),
        }

    @app.get("/projection/patients")
    def projection_patients(
        treatment: str, symptoms: str | None = None, seed: int | None = None
    ):
        clustered = session.latest_clustered(treatment)
        effective_seed = session.config.seed if seed is None else seed
        subset = symptoms.split(",") if symptoms else None
        if subset:
            unknown = [s for s in subset if s not in SYMPTOMS]
            if unknown:
                raise HTTPException(422, f"unknown symptoms {unknown}")
        points = patient_projection(
            session.stratum(treatment),
            list(clustered.clusters),
            symptom_subset=subset,
            seed=effective_seed,
        )
        return {
            "treatment": treatment,
            "seed": effective_seed,
            "symptoms": subset,
            "points": [serialize.point_payload(p) for p in points],
        }

    @app.get("/sankey")
    def sankey(treatment: str, seed: int | None = None):
        clustered = session.latest_clustered(treatment)
        stratum = session.stratum(treatment)
        effective_seed = session.config.seed if seed is None else seed
        tiers = burden_tiers(stratum, seed=effective_seed)
        memberships = cluster_memberships(stratum, list(clustered.clusters))
        graph = sankey_flows(stratum, memberships, tiers)
        return {
            "treatment": treatment,
            "seed": effective_seed,
            "tiers": serialize.tiers_payload(tiers),
            "graph": serialize.sankey_payload(graph),
        }

    @app.get("/timeline")
    def timeline(treatment: str, patients: str | None = None):
        clustered = session.latest_clustered(treatment)
        stratum = session.stratum(treatment)
        wanted = patients.split(",") if patients else None
        if wanted:
            known = {p.patient_id for p in stratum.patients}
            unknown = [pid for pid in wanted if pid not in known]
            if unknown:
                raise HTTPException(404, f"unknown patients {unknown}")
        profiles = severity_profiles(list(stratum.patients))
        try:
            ordering = order_symptoms(profiles)
        except ValueError:
            ordering = list(SYMPTOMS)
        rows = timeline_rows(
            stratum, ordering, list(clustered.clusters), patients=wanted
        )
        return {
            "treatment": treatment,
            "rows": [serialize.timeline_payload(r) for r in rows],
        }

    return app
