"""Sequential rule mining and cohort analytics for longitudinal
patient-reported symptom data."""

from .clustering import (
    CutPolicy,
    Dendrogram,
    RuleCluster,
    RuleClusterer,
    RuleSimilarityMatrix,
    agglomerate,
    build_clusters,
    cut,
    rule_similarity,
)
from .cohort import (
    CohortError,
    CohortTable,
    PatientRecord,
    PlantedPattern,
    SyntheticSpec,
    ValidationReport,
    generate_synthetic_cohort,
    load_cohort,
    stratify_by_treatment,
    validate_cohort,
    write_cohort,
)
from .mining import (
    MiningParams,
    SequentialRule,
    SequentialRuleMiner,
    generate_candidate_rules,
    generate_rules,
    mine_frequent_stage_itemsets,
    mine_rules,
    supporting_patients,
)
from .sequences import (
    PatientSequence,
    SequenceBuilder,
    Thresholds,
    build_sequences,
    stage_itemset,
)
from .vocab import SYMPTOMS, Stage, TREATMENTS

__version__ = "0.1.0"

__all__ = [
    "CohortError",
    "CohortTable",
    "CutPolicy",
    "Dendrogram",
    "MiningParams",
    "PatientRecord",
    "PatientSequence",
    "PlantedPattern",
    "RuleCluster",
    "RuleClusterer",
    "RuleSimilarityMatrix",
    "SYMPTOMS",
    "SequenceBuilder",
    "SequentialRule",
    "SequentialRuleMiner",
    "Stage",
    "SyntheticSpec",
    "TREATMENTS",
    "Thresholds",
    "ValidationReport",
    "agglomerate",
    "build_clusters",
    "build_sequences",
    "cut",
    "generate_candidate_rules",
    "generate_rules",
    "generate_synthetic_cohort",
    "load_cohort",
    "mine_frequent_stage_itemsets",
    "mine_rules",
    "rule_similarity",
    "stage_itemset",
    "stratify_by_treatment",
    "supporting_patients",
    "validate_cohort",
    "write_cohort",
]
