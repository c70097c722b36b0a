import math
import random

import numpy as np
import pytest
from scipy.cluster.hierarchy import fcluster, linkage
from scipy.spatial.distance import squareform

from seqsym.clustering import (
    CutPolicy,
    RuleClusterer,
    RuleSimilarityMatrix,
    agglomerate,
    build_clusters,
    cut,
    rule_similarity,
)
from seqsym.mining import MiningParams, SequentialRule, generate_rules
from seqsym.sequences import PatientSequence

from conftest import F2_PATTERN, random_sequences


def make_rule(antecedent, consequent, supporters, n=10):
    supporters = tuple(sorted(supporters))
    return SequentialRule(
        antecedent=frozenset(antecedent),
        consequent=frozenset(consequent),
        support=len(supporters) / n,
        confidence=1.0,
        lift=1.5,
        supporters=supporters,
    )


class TestRuleSimilarity:
    def test_half_overlap(self):
        rules = [
            make_rule({"a"}, {"x"}, {"1", "2", "3"}),
            make_rule({"b"}, {"x"}, {"2", "3", "4"}),
        ]
        matrix = rule_similarity(rules)
        assert matrix.values[0][1] == 0.5

    def test_identical_supporters(self):
        rules = [
            make_rule({"a"}, {"x"}, {"1", "2"}),
            make_rule({"b"}, {"y"}, {"1", "2"}),
        ]
        assert rule_similarity(rules).values[0][1] == 1.0

    def test_disjoint_supporters(self):
        rules = [
            make_rule({"a"}, {"x"}, {"1"}),
            make_rule({"b"}, {"y"}, {"2"}),
        ]
        assert rule_similarity(rules).values[0][1] == 0.0

    def test_matrix_invariants_enforced(self):
        with pytest.raises(ValueError, match="diagonal"):
            RuleSimilarityMatrix(2, ((0.5, 0.1), (0.1, 1.0)))
        with pytest.raises(ValueError, match="symmetric"):
            RuleSimilarityMatrix(2, ((1.0, 0.1), (0.2, 1.0)))


def three_rule_fixture():
    """Three rules with pairwise Jaccard AB 0.9, AC 0.2, BC 0.2 exactly."""
    # J(A,B): |A|=|B|=19, 18 shared -> 18/20 = 0.9
    a = {f"p{i:02d}" for i in range(19)}
    b = {f"p{i:02d}" for i in range(1, 20)}
    # J(A,C) = J(B,C): 5 ids shared with A∩B plus 6 fresh -> 5/25 = 0.2
    c = {f"p{i:02d}" for i in range(1, 6)} | {f"q{i:02d}" for i in range(6)}
    assert len(a & b) / len(a | b) == 0.9
    assert len(a & c) / len(a | c) == 0.2
    assert len(b & c) / len(b | c) == 0.2
    return [
        make_rule({"a"}, {"x"}, a, n=40),
        make_rule({"b"}, {"x"}, b, n=40),
        make_rule({"c"}, {"y"}, c, n=40),
    ]


class TestAgglomerate:
    def test_hand_fixture_merge_heights(self):
        dendrogram = agglomerate(rule_similarity(three_rule_fixture()))
        first, second = dendrogram.merges
        assert (first.left, first.right) == (0, 1)
        assert first.height == pytest.approx(0.1, abs=1e-12)
        assert second.height == pytest.approx(0.8, abs=1e-12)
        assert (second.left, second.right) == (2, 3)

    def test_identical_supporters_merge_at_zero(self):
        rules = [make_rule({s}, {"x"}, {"1", "2"}) for s in "abc"]
        dendrogram = agglomerate(rule_similarity(rules))
        assert all(m.height == 0.0 for m in dendrogram.merges)

    def test_single_rule_empty_dendrogram(self):
        dendrogram = agglomerate(rule_similarity([make_rule({"a"}, {"x"}, {"1"})]))
        assert dendrogram.merges == ()
        assert dendrogram.n_leaves == 1

    def test_heights_non_decreasing(self):
        rng = random.Random(31)
        for _ in range(30):
            n_rules = rng.randint(2, 12)
            rules = [
                make_rule(
                    {f"s{i}"},
                    {"x"},
                    {f"p{j}" for j in range(20) if rng.random() < 0.4} or {"p0"},
                    n=20,
                )
                for i in range(n_rules)
            ]
            heights = [m.height for m in agglomerate(rule_similarity(rules)).merges]
            assert heights == sorted(heights)

    def test_partitions_match_scipy(self):
        rng = random.Random(77)
        for _ in range(15):
            n_rules = rng.randint(3, 10)
            rules = [
                make_rule(
                    {f"s{i}"},
                    {"x"},
                    {f"p{j}" for j in range(30) if rng.random() < 0.5} or {f"p{i}"},
                    n=30,
                )
                for i in range(n_rules)
            ]
            matrix = rule_similarity(rules)
            distances = 1.0 - matrix.as_array()
            # Skip draws with tied pair distances; tie-breaking conventions差
            # differ between implementations by design.
            condensed = squareform(distances, checks=False)
            if len(set(np.round(condensed, 12))) != len(condensed):
                continue
            z = linkage(condensed, method="complete")
            dendrogram = agglomerate(matrix)
            ours = sorted(round(m.height, 9) for m in dendrogram.merges)
            scipys = sorted(round(h, 9) for h in z[:, 2])
            assert ours == scipys
            for k in range(1, n_rules + 1):
                ours_labels = cut(dendrogram, CutPolicy(n_clusters=k))
                scipy_labels = fcluster(z, t=k, criterion="maxclust")
                our_groups = {}
                scipy_groups = {}
                for idx in range(n_rules):
                    our_groups.setdefault(ours_labels[idx], set()).add(idx)
                    scipy_groups.setdefault(int(scipy_labels[idx]), set()).add(idx)
                assert sorted(map(sorted, our_groups.values())) == sorted(
                    map(sorted, scipy_groups.values())
                )


class TestCut:
    def test_singletons(self):
        rules = three_rule_fixture()
        dendrogram = agglomerate(rule_similarity(rules))
        assert cut(dendrogram, CutPolicy(n_clusters=3)) == [0, 1, 2]

    def test_single_cluster(self):
        dendrogram = agglomerate(rule_similarity(three_rule_fixture()))
        assert cut(dendrogram, CutPolicy(n_clusters=1)) == [0, 0, 0]

    def test_two_clusters_isolates_c(self):
        dendrogram = agglomerate(rule_similarity(three_rule_fixture()))
        assert cut(dendrogram, CutPolicy(n_clusters=2)) == [0, 0, 1]

    def test_height_cut(self):
        dendrogram = agglomerate(rule_similarity(three_rule_fixture()))
        assert cut(dendrogram, CutPolicy(height=0.5)) == [0, 0, 1]
        assert cut(dendrogram, CutPolicy(height=0.05)) == [0, 1, 2]
        assert cut(dendrogram, CutPolicy(height=1.0)) == [0, 0, 0]

    def test_k_out_of_range(self):
        dendrogram = agglomerate(rule_similarity(three_rule_fixture()))
        with pytest.raises(ValueError):
            cut(dendrogram, CutPolicy(n_clusters=4))

    def test_policy_requires_exactly_one_knob(self):
        with pytest.raises(ValueError):
            CutPolicy()
        with pytest.raises(ValueError):
            CutPolicy(n_clusters=2, height=0.5)


class TestBuildClusters:
    def test_f2_cross_treatment_ratio(self, f2_sequences):
        inside, outside = f2_sequences
        acute, late = F2_PATTERN
        rule = make_rule(acute, late, {"A1", "A2"}, n=4)
        clusters = build_clusters([rule], [0], inside, outside)
        assert len(clusters) == 1
        assert clusters[0].cross_treatment_ratio == pytest.approx(2.5, abs=1e-12)

    def test_singleton_cluster_reproduces_rule_metrics(self, f1_sequences):
        params = MiningParams(min_support=0.5, min_confidence=0.5, min_lift=1.0)
        rules = generate_rules(f1_sequences, params)
        clusters = build_clusters(
            rules, list(range(len(rules))), f1_sequences, []
        )
        for rule, cluster in zip(rules, clusters):
            n = len(f1_sequences)
            sup_x = sum(1 for s in f1_sequences if rule.antecedent <= s.acute_set) / n
            assert cluster.acute_support == pytest.approx(sup_x, abs=1e-12)
            assert cluster.cluster_confidence == pytest.approx(
                rule.confidence, abs=1e-12
            )
            assert cluster.patients == rule.supporters

    def test_patient_union_is_exact(self):
        rules = [
            make_rule({"a"}, {"x"}, {"1", "2"}),
            make_rule({"b"}, {"x"}, {"2", "3"}),
        ]
        sequences = [
            PatientSequence("1", frozenset({"a", "b"}), frozenset({"x"})),
            PatientSequence("2", frozenset({"a"}), frozenset({"x"})),
            PatientSequence("3", frozenset({"b"}), frozenset({"x"})),
        ]
        clusters = build_clusters(rules, [0, 0], sequences, [])
        assert clusters[0].patients == ("1", "2", "3")
        assert clusters[0].acute_symptoms == {"a", "b"}
        assert clusters[0].late_symptoms == {"x"}

    def test_merged_pattern_can_be_degenerate(self):
        rules = [
            make_rule({"a"}, {"x"}, {"1"}),
            make_rule({"b"}, {"x"}, {"2"}),
        ]
        sequences = [
            PatientSequence("1", frozenset({"a"}), frozenset({"x"})),
            PatientSequence("2", frozenset({"b"}), frozenset({"x"})),
        ]
        clusters = build_clusters(rules, [0, 0], sequences, [])
        assert clusters[0].degenerate
        assert clusters[0].cluster_confidence is None

    def test_unbounded_ratio_sentinel(self, f1_sequences):
        rule = make_rule({"taste"}, {"dryMouth"}, {"P1", "P2", "P3", "P5"}, n=5)
        outsiders = [PatientSequence("Z1", frozenset(), frozenset())]
        clusters = build_clusters([rule], [0], f1_sequences, outsiders)
        assert math.isinf(clusters[0].cross_treatment_ratio)

    def test_below_threshold_flag(self):
        rules = [
            make_rule({"a"}, {"x"}, {"1"}),
            make_rule({"b"}, {"y"}, {"2"}),
        ]
        sequences = [
            PatientSequence("1", frozenset({"a"}), frozenset({"x"})),
            PatientSequence("2", frozenset({"b"}), frozenset({"y"})),
            PatientSequence("3", frozenset(), frozenset()),
        ]
        clusters = build_clusters(rules, [0, 0], sequences, [], min_support=0.3)
        assert clusters[0].below_mining_threshold  # merged pattern has support 0

    def test_ratio_consistency_with_independent_counts(self):
        rng = random.Random(5)
        for _ in range(20):
            inside = random_sequences(rng, min_patients=4)
            outside = random_sequences(rng, min_patients=4)
            params = MiningParams(min_support=0.2, min_confidence=0.2, min_lift=0.0)
            try:
                rules = generate_rules(inside, params)
            except ValueError:
                continue
            if not rules:
                continue
            clusters = build_clusters(rules, [0] * len(rules), inside, outside)
            cluster = clusters[0]
            joint_in = sum(
                1
                for s in inside
                if cluster.acute_symptoms <= s.acute_set
                and cluster.late_symptoms <= s.late_set
            )
            joint_out = sum(
                1
                for s in outside
                if cluster.acute_symptoms <= s.acute_set
                and cluster.late_symptoms <= s.late_set
            )
            if joint_out == 0:
                assert math.isinf(cluster.cross_treatment_ratio)
            else:
                expected = (joint_in / len(inside)) / (joint_out / len(outside))
                assert cluster.cross_treatment_ratio == pytest.approx(
                    expected, abs=1e-12
                )


class TestRuleClusterer:
    def test_fit_sets_labels(self):
        clusterer = RuleClusterer(cut_height=0.5)
        labels = clusterer.fit_predict(three_rule_fixture())
        assert labels == [0, 0, 1]
        assert clusterer.n_clusters_ == 2

    def test_k_override(self):
        clusterer = RuleClusterer(n_clusters=3)
        assert clusterer.fit_predict(three_rule_fixture()) == [0, 1, 2]

    def test_get_params(self):
        assert RuleClusterer(cut_height=0.4).get_params() == {
            "cut_height": 0.4,
            "n_clusters": None,
        }
