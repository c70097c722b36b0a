"""Batch command-line interface: synth, mine, cluster, analytics, serve.

Exit codes: 0 success, 2 data/validation error, 64 usage error (unknown flag,
missing required argument).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

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
from .clustering import CutPolicy, agglomerate, build_clusters, cut, rule_similarity
from .cohort import (
    CohortError,
    PlantedPattern,
    SyntheticSpec,
    generate_synthetic_cohort,
    load_cohort,
    stratify_by_treatment,
    write_cohort,
)
from .mining import MiningParams, mine_rules
from .sequences import Thresholds, build_sequences
from .vocab import NON_MINABLE_TREATMENTS, SYMPTOMS

USAGE_EXIT = 64
VALIDATION_EXIT = 2


class CliError(Exception):
    """Data-level failure; reported on stderr with exit code 2."""


class Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 64
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def max_workers() -> int:
    raw = os.environ.get("SEQSYM_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return os.cpu_count() or 1
    return max(1, value)


def _write_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _load_stratum(args) -> tuple:
    cohort = load_cohort(args.clinical, args.ratings)
    strata = stratify_by_treatment(cohort)
    if args.treatment not in strata:
        raise CliError(f"treatment {args.treatment!r} not present in the cohort")
    if args.treatment in NON_MINABLE_TREATMENTS:
        raise CliError(f"treatment {args.treatment!r} is excluded from mining")
    return cohort, strata


def _effective_params(args, n_sequences: int) -> MiningParams:
    overrides = {}
    if args.min_support is not None:
        overrides["min_support"] = args.min_support
    if args.min_confidence is not None:
        overrides["min_confidence"] = args.min_confidence
    if args.min_lift is not None:
        overrides["min_lift"] = args.min_lift
    if args.max_itemset_size is not None:
        overrides["max_itemset_size"] = args.max_itemset_size
    return MiningParams.for_stratum(n_sequences, **overrides)


def _thresholds(args) -> Thresholds:
    return Thresholds(args.acute_threshold, args.late_threshold)


def _mine_stratum(args):
    cohort, strata = _load_stratum(args)
    thresholds = _thresholds(args)
    sequences = build_sequences(strata[args.treatment], thresholds)
    params = _effective_params(args, len(sequences))
    candidates, rules = mine_rules(sequences, params)
    return cohort, strata, thresholds, sequences, params, candidates, rules


def cmd_synth(args) -> int:
    with open(args.spec, encoding="utf-8") as f:
        raw = json.load(f)
    spec = SyntheticSpec(
        counts=dict(raw["counts"]),
        patterns=tuple(
            PlantedPattern(
                treatment=p["treatment"],
                acute=frozenset(p["acute"]),
                late=frozenset(p["late"]),
                penetrance=p["penetrance"],
            )
            for p in raw.get("patterns", [])
        ),
        noise=raw.get("noise", 0.0),
        missingness=raw.get("missingness", 0.0),
        seed=raw.get("seed", 0),
        theta_acute=raw.get("theta_acute", 5),
        theta_late=raw.get("theta_late", 3),
    )
    cohort = generate_synthetic_cohort(spec)
    os.makedirs(args.out, exist_ok=True)
    clinical = os.path.join(args.out, "clinical.csv")
    ratings = os.path.join(args.out, "ratings.csv")
    write_cohort(cohort, clinical, ratings)
    sys.stderr.write(f"wrote {len(cohort)} patients to {args.out}\n")
    return 0


def cmd_mine(args) -> int:
    _, _, thresholds, sequences, params, candidates, rules = _mine_stratum(args)
    chosen = candidates if args.unfiltered else rules
    payload = {
        "treatment": args.treatment,
        "params": serialize.params_payload(params),
        "thresholds": serialize.thresholds_payload(thresholds),
        "n_sequences": len(sequences),
        "filtered": not args.unfiltered,
        "rules": [serialize.rule_payload(r) for r in chosen],
        "unfiltered_rule_count": len(candidates),
    }
    _write_json(payload, args.out)
    return 0


def cmd_cluster(args) -> int:
    _, strata, thresholds, sequences, params, _, rules = _mine_stratum(args)
    if not rules:
        raise CliError(f"treatment {args.treatment!r} mined no rules to cluster")
    if args.clusters is not None:
        policy = CutPolicy(n_clusters=args.clusters)
    else:
        policy = CutPolicy(height=args.cut_height)
    labels = cut(agglomerate(rule_similarity(rules)), policy)
    other = []
    for treatment, stratum in strata.items():
        if treatment == args.treatment or treatment in NON_MINABLE_TREATMENTS:
            continue
        other.extend(build_sequences(stratum, thresholds))
    clusters = build_clusters(
        rules, labels, sequences, other, min_support=params.min_support
    )
    payload = {
        "treatment": args.treatment,
        "params": serialize.params_payload(params),
        "thresholds": serialize.thresholds_payload(thresholds),
        "cut_policy": serialize.cut_policy_payload(policy),
        "clusters": [serialize.cluster_payload(c) for c in clusters],
    }
    _write_json(payload, args.out)
    return 0


def cmd_analytics(args) -> int:
    _, strata, thresholds, sequences, params, candidates, rules = _mine_stratum(args)
    stratum = strata[args.treatment]
    if rules:
        if args.clusters is not None:
            policy = CutPolicy(n_clusters=args.clusters)
        else:
            policy = CutPolicy(height=args.cut_height)
        labels = cut(agglomerate(rule_similarity(rules)), policy)
        other = []
        for treatment, table in strata.items():
            if treatment == args.treatment or treatment in NON_MINABLE_TREATMENTS:
                continue
            other.extend(build_sequences(table, thresholds))
        clusters = build_clusters(
            rules, labels, sequences, other, min_support=params.min_support
        )
    else:
        clusters = []

    profiles = severity_profiles(list(stratum.patients))
    try:
        ordering = order_symptoms(profiles)
    except ValueError:
        ordering = list(SYMPTOMS)

    with ThreadPoolExecutor(max_workers=max_workers()) as pool:
        prevalence_future = pool.submit(
            prevalence_query, stratum, thresholds, clusters=clusters
        )
        tiers_future = pool.submit(burden_tiers, stratum, args.seed)
        patient_points_future = pool.submit(
            patient_projection, stratum, clusters, None, args.seed
        )
        prevalence = prevalence_future.result()
        tiers = tiers_future.result()
        patient_points = patient_points_future.result()

    memberships = cluster_memberships(stratum, clusters)
    graph = sankey_flows(stratum, memberships, tiers)
    timelines = timeline_rows(stratum, ordering, clusters)

    payload = {
        "treatment": args.treatment,
        "seed": args.seed,
        "params": serialize.params_payload(params),
        "thresholds": serialize.thresholds_payload(thresholds),
        "profiles": [serialize.profile_payload(p) for p in profiles],
        "ordering": ordering,
        "rules": [serialize.rule_payload(r) for r in rules],
        "clusters": [serialize.cluster_payload(c) for c in clusters],
        "prevalence": [serialize.prevalence_payload(r) for r in prevalence],
        "tiers": serialize.tiers_payload(tiers),
        "patient_projection": [serialize.point_payload(p) for p in patient_points],
        "sankey": serialize.sankey_payload(graph),
        "timeline": [serialize.timeline_payload(r) for r in timelines],
    }
    distinct_acute = set()
    for cluster_obj in clusters:
        distinct_acute |= cluster_obj.acute_symptoms
    if len(distinct_acute) >= 2:
        projection = symptom_projection(
            clusters, sequences, seed=args.seed, unfiltered_rules=candidates
        )
        payload["symptom_projection"] = serialize.symptom_projection_payload(projection)
    else:
        payload["symptom_projection"] = None
    _write_json(payload, args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import SessionConfig, create_app

    if args.synthetic:
        with open(args.synthetic, encoding="utf-8") as f:
            raw = json.load(f)
        spec = SyntheticSpec(
            counts=dict(raw["counts"]),
            patterns=tuple(
                PlantedPattern(
                    treatment=p["treatment"],
                    acute=frozenset(p["acute"]),
                    late=frozenset(p["late"]),
                    penetrance=p["penetrance"],
                )
                for p in raw.get("patterns", [])
            ),
            noise=raw.get("noise", 0.0),
            missingness=raw.get("missingness", 0.0),
            seed=raw.get("seed", 0),
            theta_acute=raw.get("theta_acute", 5),
            theta_late=raw.get("theta_late", 3),
        )
        config = SessionConfig(synthetic=spec, seed=args.seed)
    else:
        if not args.clinical or not args.ratings:
            raise CliError("serve needs --clinical/--ratings or --synthetic")
        config = SessionConfig(
            clinical_path=args.clinical, ratings_path=args.ratings, seed=args.seed
        )
    app = create_app(config)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _add_data_flags(parser, required=True):
    parser.add_argument("--clinical", required=required, help="clinical CSV path")
    parser.add_argument("--ratings", required=required, help="ratings CSV path")


def _add_mining_flags(parser):
    parser.add_argument("--treatment", required=True)
    parser.add_argument("--acute-threshold", type=int, default=5)
    parser.add_argument("--late-threshold", type=int, default=3)
    parser.add_argument(
        "--min-support",
        type=float,
        default=None,
        help="default 0.3, or 0.4 when the stratum has fewer than 100 sequences",
    )
    parser.add_argument("--min-confidence", type=float, default=None)
    parser.add_argument("--min-lift", type=float, default=None)
    parser.add_argument("--max-itemset-size", type=int, default=None)


def _add_cut_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--cut-height", type=float, default=0.5)
    group.add_argument("--clusters", type=int, default=None)


def build_parser() -> Parser:
    parser = Parser(prog="seqsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="generate a synthetic cohort")
    synth.add_argument("--spec", required=True, help="synthetic spec JSON")
    synth.add_argument("--out", required=True, help="output directory")
    synth.set_defaults(func=cmd_synth)

    mine = sub.add_parser("mine", help="mine sequential rules for one treatment")
    _add_data_flags(mine)
    _add_mining_flags(mine)
    mine.add_argument("--unfiltered", action="store_true", help="skip the lift filter")
    mine.add_argument("--out", default=None, help="output JSON path (default stdout)")
    mine.set_defaults(func=cmd_mine)

    cluster = sub.add_parser("cluster", help="mine then cluster rules")
    _add_data_flags(cluster)
    _add_mining_flags(cluster)
    _add_cut_flags(cluster)
    cluster.add_argument("--out", default=None)
    cluster.set_defaults(func=cmd_cluster)

    analytics = sub.add_parser("analytics", help="full analytics bundle")
    _add_data_flags(analytics)
    _add_mining_flags(analytics)
    _add_cut_flags(analytics)
    analytics.add_argument("--seed", type=int, default=0)
    analytics.add_argument("--out", default=None)
    analytics.set_defaults(func=cmd_analytics)

    serve = sub.add_parser("serve", help="run the HTTP service")
    _add_data_flags(serve, required=False)
    serve.add_argument("--synthetic", default=None, help="synthetic spec JSON")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8337)
    serve.add_argument("--seed", type=int, default=0)
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, CohortError, ValueError, OSError) as exc:
        sys.stderr.write(f"seqsym: {exc}\n")
        return VALIDATION_EXIT


if __name__ == "__main__":
    sys.exit(main())
