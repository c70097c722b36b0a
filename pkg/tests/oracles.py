"""Independent oracles for the test suite.

These deliberately avoid the library's mining/linkage/PCA code paths: rules
come from direct subset-pair enumeration and counting, PCA from a dense
eigen-decomposition of the covariance, linkage cross-checks go through scipy.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

RuleKey = tuple[frozenset, frozenset]


def brute_force_rules(sequences, params) -> dict[RuleKey, tuple]:
    """Enumerate every antecedent/consequent subset pair and apply the
    thresholds directly to counted supports.

    Returns {(antecedent, consequent): (support, confidence, lift, supporters)}.
    """
    n = len(sequences)
    acute_items = sorted(set().union(*(s.acute_set for s in sequences)))
    late_items = sorted(set().union(*(s.late_set for s in sequences)))

    rules: dict[RuleKey, tuple] = {}
    for size_x in range(1, params.max_itemset_size + 1):
        for x in combinations(acute_items, size_x):
            xs = frozenset(x)
            x_count = sum(1 for s in sequences if xs <= s.acute_set)
            if x_count / n < params.min_support:
                continue
            for size_y in range(1, params.max_itemset_size + 1):
                for y in combinations(late_items, size_y):
                    ys = frozenset(y)
                    y_count = sum(1 for s in sequences if ys <= s.late_set)
                    if y_count / n < params.min_support:
                        continue
                    supporters = tuple(
                        sorted(
                            s.patient_id
                            for s in sequences
                            if xs <= s.acute_set and ys <= s.late_set
                        )
                    )
                    support = len(supporters) / n
                    if support < params.min_support:
                        continue
                    confidence = len(supporters) / x_count
                    if confidence < params.min_confidence:
                        continue
                    lift = (len(supporters) * n) / (x_count * y_count)
                    if lift <= params.min_lift:
                        continue
                    rules[(xs, ys)] = (support, confidence, lift, supporters)
    return rules


def brute_force_itemsets(stage_sets, min_support, max_size):
    """All frequent itemsets by exhaustive subset enumeration."""
    n = len(stage_sets)
    items = sorted(set().union(*stage_sets))
    out = {}
    for size in range(1, max_size + 1):
        for combo in combinations(items, size):
            cs = frozenset(combo)
            count = sum(1 for s in stage_sets if cs <= s)
            if count / n >= min_support:
                out[cs] = count / n
    return out


def pca_eigh_oracle(matrix: np.ndarray):
    """PCA by eigen-decomposition of the covariance of the centered rows."""
    X = np.asarray(matrix, dtype=float)
    n = X.shape[0]
    centered = X - X.mean(axis=0)
    cov = centered.T @ centered / (n - 1)
    eigenvalues, eigenvectors = np.linalg.eigh(cov)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]
    scores = centered @ eigenvectors
    return scores, eigenvectors.T, np.clip(eigenvalues, 0.0, None)
