"""Published JSON Schemas for every service payload; golden-file tests pin
responses against these."""

from __future__ import annotations

FRACTION = {"type": "number", "minimum": 0, "maximum": 1}
SYMPTOM_LIST = {"type": "array", "items": {"type": "string"}}
PATIENT_LIST = {"type": "array", "items": {"type": "string"}}

PARAMS_SCHEMA = {
    "type": "object",
    "required": ["min_support", "min_confidence", "min_lift", "max_itemset_size"],
    "properties": {
        "min_support": FRACTION,
        "min_confidence": FRACTION,
        "min_lift": {"type": "number", "minimum": 0},
        "max_itemset_size": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}

THRESHOLDS_SCHEMA = {
    "type": "object",
    "required": ["theta_acute", "theta_late"],
    "properties": {
        "theta_acute": {"type": "integer", "minimum": 0, "maximum": 10},
        "theta_late": {"type": "integer", "minimum": 0, "maximum": 10},
    },
    "additionalProperties": False,
}

RULE_SCHEMA = {
    "type": "object",
    "required": ["antecedent", "consequent", "support", "confidence", "lift", "supporters"],
    "properties": {
        "antecedent": {**SYMPTOM_LIST, "minItems": 1},
        "consequent": {**SYMPTOM_LIST, "minItems": 1},
        "support": FRACTION,
        "confidence": FRACTION,
        "lift": {"type": "number", "minimum": 0},
        "supporters": PATIENT_LIST,
    },
    "additionalProperties": False,
}

CLUSTER_SCHEMA = {
    "type": "object",
    "required": [
        "cluster_id", "rule_indices", "acute_symptoms", "late_symptoms",
        "patients", "acute_support", "cluster_confidence",
        "cross_treatment_ratio", "degenerate", "below_mining_threshold",
    ],
    "properties": {
        "cluster_id": {"type": "integer", "minimum": 1},
        "rule_indices": {"type": "array", "items": {"type": "integer"}},
        "acute_symptoms": {**SYMPTOM_LIST, "minItems": 1},
        "late_symptoms": {**SYMPTOM_LIST, "minItems": 1},
        "patients": PATIENT_LIST,
        "acute_support": FRACTION,
        "cluster_confidence": {"oneOf": [FRACTION, {"type": "null"}]},
        "cross_treatment_ratio": {
            "oneOf": [
                {"type": "number", "minimum": 0},
                {"const": "unbounded"},
            ]
        },
        "degenerate": {"type": "boolean"},
        "below_mining_threshold": {"type": "boolean"},
    },
    "additionalProperties": False,
}

HEALTH_SCHEMA = {
    "type": "object",
    "required": ["status"],
    "properties": {"status": {"const": "ok"}},
    "additionalProperties": False,
}

TREATMENTS_SCHEMA = {
    "type": "object",
    "required": ["treatments"],
    "properties": {
        "treatments": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["treatment", "size", "minable"],
                "properties": {
                    "treatment": {"type": "string"},
                    "size": {"type": "integer", "minimum": 1},
                    "minable": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

COHORT_SUMMARY_SCHEMA = {
    "type": "object",
    "required": ["patients", "treatments", "symptoms", "timepoints", "provenance"],
    "properties": {
        "patients": {"type": "integer", "minimum": 1},
        "treatments": {"type": "object", "additionalProperties": {"type": "integer"}},
        "symptoms": SYMPTOM_LIST,
        "timepoints": {"const": 12},
        "provenance": {"type": "string"},
    },
    "additionalProperties": False,
}

MINE_RESPONSE_SCHEMA = {
    "type": "object",
    "required": [
        "treatment", "params", "thresholds", "n_sequences", "filtered",
        "rules", "unfiltered_rule_count",
    ],
    "properties": {
        "treatment": {"type": "string"},
        "params": PARAMS_SCHEMA,
        "thresholds": THRESHOLDS_SCHEMA,
        "n_sequences": {"type": "integer", "minimum": 1},
        "filtered": {"type": "boolean"},
        "rules": {"type": "array", "items": RULE_SCHEMA},
        "unfiltered_rule_count": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

CLUSTERS_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "params", "thresholds", "cut_policy", "clusters"],
    "properties": {
        "treatment": {"type": "string"},
        "params": PARAMS_SCHEMA,
        "thresholds": THRESHOLDS_SCHEMA,
        "cut_policy": {
            "type": "object",
            "properties": {
                "cut_height": {"type": "number", "minimum": 0, "maximum": 1},
                "n_clusters": {"type": "integer", "minimum": 1},
            },
            "additionalProperties": False,
            "minProperties": 1,
            "maxProperties": 1,
        },
        "clusters": {"type": "array", "items": CLUSTER_SCHEMA},
    },
    "additionalProperties": False,
}

PROFILES_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "profiles", "ordering", "predicted"],
    "properties": {
        "treatment": {"oneOf": [{"type": "string"}, {"type": "null"}]},
        "profiles": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["symptom", "values"],
                "properties": {
                    "symptom": {"type": "string"},
                    "values": {
                        "type": "array",
                        "minItems": 12,
                        "maxItems": 12,
                        "items": {
                            "oneOf": [
                                {"type": "number", "minimum": 0, "maximum": 10},
                                {"type": "null"},
                            ]
                        },
                    },
                },
                "additionalProperties": False,
            },
        },
        "ordering": SYMPTOM_LIST,
        "predicted": SYMPTOM_LIST,
    },
    "additionalProperties": False,
}

PREVALENCE_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "thresholds", "t_stage", "n_stage", "rows"],
    "properties": {
        "treatment": {"type": "string"},
        "thresholds": THRESHOLDS_SCHEMA,
        "t_stage": {"oneOf": [{"type": "string"}, {"type": "null"}]},
        "n_stage": {"oneOf": [{"type": "string"}, {"type": "null"}]},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["symptom", "pct_acute", "pct_late", "in_cluster"],
                "properties": {
                    "symptom": {"type": "string"},
                    "pct_acute": FRACTION,
                    "pct_late": FRACTION,
                    "in_cluster": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

POINT_SCHEMA = {
    "type": "object",
    "required": ["id", "x", "y", "clusters"],
    "properties": {
        "id": {"type": "string"},
        "x": {"type": "number"},
        "y": {"type": "number"},
        "clusters": {"type": "array", "items": {"type": "integer"}},
        "acute_total": {"type": "number", "minimum": 0},
        "late_total": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}

SYMPTOM_PROJECTION_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "seed", "projection"],
    "properties": {
        "treatment": {"type": "string"},
        "seed": {"type": "integer"},
        "projection": {
            "type": "object",
            "required": [
                "acute_points", "late_symptoms", "explained_variance",
                "collision_diameter",
            ],
            "properties": {
                "acute_points": {"type": "array", "items": POINT_SCHEMA},
                "late_symptoms": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["symptom", "predicted"],
                        "properties": {
                            "symptom": {"type": "string"},
                            "predicted": {"type": "boolean"},
                        },
                        "additionalProperties": False,
                    },
                },
                "explained_variance": {
                    "type": "array",
                    "items": {"type": "number"},
                },
                "collision_diameter": {"type": "number", "minimum": 0},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

PATIENT_PROJECTION_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "seed", "symptoms", "points"],
    "properties": {
        "treatment": {"type": "string"},
        "seed": {"type": "integer"},
        "symptoms": {"oneOf": [SYMPTOM_LIST, {"type": "null"}]},
        "points": {"type": "array", "items": POINT_SCHEMA},
    },
    "additionalProperties": False,
}

SANKEY_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "seed", "tiers", "graph"],
    "properties": {
        "treatment": {"type": "string"},
        "seed": {"type": "integer"},
        "tiers": {
            "type": "object",
            "required": ["assignments", "acute_fallback", "late_fallback"],
            "properties": {
                "assignments": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "object",
                        "required": ["acute_tier", "late_tier"],
                        "properties": {
                            "acute_tier": {"enum": ["low", "medium", "high"]},
                            "late_tier": {"enum": ["low", "medium", "high"]},
                        },
                        "additionalProperties": False,
                    },
                },
                "acute_fallback": {"type": "boolean"},
                "late_fallback": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "graph": {
            "type": "object",
            "required": ["axes", "links"],
            "properties": {
                "axes": {
                    "type": "array",
                    "minItems": 5,
                    "maxItems": 5,
                    "items": {
                        "type": "object",
                        "required": ["name", "nodes"],
                        "properties": {
                            "name": {"type": "string"},
                            "nodes": {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "required": ["label", "count", "patients"],
                                    "properties": {
                                        "label": {"type": "string"},
                                        "count": {"type": "integer", "minimum": 1},
                                        "patients": PATIENT_LIST,
                                    },
                                    "additionalProperties": False,
                                },
                            },
                        },
                        "additionalProperties": False,
                    },
                },
                "links": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["source_axis", "source", "target", "count", "patients"],
                        "properties": {
                            "source_axis": {"type": "integer", "minimum": 0, "maximum": 3},
                            "source": {"type": "string"},
                            "target": {"type": "string"},
                            "count": {"type": "integer", "minimum": 1},
                            "patients": PATIENT_LIST,
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

TIMELINE_RESPONSE_SCHEMA = {
    "type": "object",
    "required": ["treatment", "rows"],
    "properties": {
        "treatment": {"type": "string"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "patient_id", "t_stage", "n_stage", "clusters",
                    "cumulative_severity", "symptoms",
                ],
                "properties": {
                    "patient_id": {"type": "string"},
                    "t_stage": {"type": "string"},
                    "n_stage": {"type": "string"},
                    "clusters": {"type": "array", "items": {"type": "integer"}},
                    "cumulative_severity": {"type": "number", "minimum": 0},
                    "symptoms": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["symptom", "acute_mean", "late_mean", "in_cluster"],
                            "properties": {
                                "symptom": {"type": "string"},
                                "acute_mean": {
                                    "oneOf": [
                                        {"type": "number", "minimum": 0, "maximum": 10},
                                        {"type": "null"},
                                    ]
                                },
                                "late_mean": {
                                    "oneOf": [
                                        {"type": "number", "minimum": 0, "maximum": 10},
                                        {"type": "null"},
                                    ]
                                },
                                "in_cluster": {"type": "boolean"},
                            },
                            "additionalProperties": False,
                        },
                    },
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

RULES_RESPONSE_SCHEMA = MINE_RESPONSE_SCHEMA

ENDPOINT_SCHEMAS = {
    "health": HEALTH_SCHEMA,
    "treatments": TREATMENTS_SCHEMA,
    "cohort_summary": COHORT_SUMMARY_SCHEMA,
    "mine": MINE_RESPONSE_SCHEMA,
    "rules": RULES_RESPONSE_SCHEMA,
    "clusters": CLUSTERS_RESPONSE_SCHEMA,
    "profiles": PROFILES_RESPONSE_SCHEMA,
    "prevalence": PREVALENCE_RESPONSE_SCHEMA,
    "projection_symptoms": SYMPTOM_PROJECTION_RESPONSE_SCHEMA,
    "projection_patients": PATIENT_PROJECTION_RESPONSE_SCHEMA,
    "sankey": SANKEY_RESPONSE_SCHEMA,
    "timeline": TIMELINE_RESPONSE_SCHEMA,
}
