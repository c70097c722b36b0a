"""Sequential rule mining over two-itemset patient sequences.

Frequent itemsets are grown levelwise per stage (Apriori-style candidate join
with subset pruning, vertical sequence-index sets for exact counting), then
acute frequent sets are joined against late frequent sets into rules scored by
support, confidence, and lift. All counts are exact integers over |S|; output
order is deterministic: itemsets by (size, lexicographic), rules by
(antecedent, consequent) under the same key.
"""

from __future__ import annotations

from dataclasses import dataclass

from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .sequences import PatientSequence
from .vocab import Stage

Itemset = tuple[str, ...]


@dataclass(frozen=True)
class MiningParams:
    """Thresholds for rule generation; min_lift is a strict lower bound."""

    min_support: float = 0.30
    min_confidence: float = 0.50
    min_lift: float = 1.0
    max_itemset_size: int = 4

    # Smaller strata get the stricter support default; the cutoff is a
    # configurable convention, not a mined quantity.
    SMALL_STRATUM_CUTOFF = 100
    SMALL_STRATUM_SUPPORT = 0.40

    def __post_init__(self) -> None:
        for value, name in (
            (self.min_support, "min_support"),
            (self.min_confidence, "min_confidence"),
        ):
            if not 0.0 < value <= 1.0:
                raise ValueError(f"{name} must be in (0, 1]")
        if self.min_lift < 0.0:
            raise ValueError("min_lift must be >= 0")
        if self.max_itemset_size < 1:
            raise ValueError("max_itemset_size must be positive")

    @classmethod
    def for_stratum(cls, n_sequences: int, **overrides) -> "MiningParams":
        if "min_support" not in overrides:
            if n_sequences < cls.SMALL_STRATUM_CUTOFF:
                overrides["min_support"] = cls.SMALL_STRATUM_SUPPORT
        return cls(**overrides)


@dataclass(frozen=True)
class SequentialRule:
    """Acute antecedent -> late consequent with exact supporter bookkeeping."""

    antecedent: frozenset[str]
    consequent: frozenset[str]
    support: float
    confidence: float
    lift: float
    supporters: tuple[str, ...]

    def key(self) -> tuple:
        return (
            len(self.antecedent),
            tuple(sorted(self.antecedent)),
            len(self.consequent),
            tuple(sorted(self.consequent)),
        )


def _stage_sets(sequences: list[PatientSequence], stage: Stage) -> list[frozenset[str]]:
    return [seq.stage_set(stage) for seq in sequences]


def _frequent_itemsets(
    stage_sets: list[frozenset[str]], min_support: float, max_size: int
) -> dict[Itemset, frozenset[int]]:
    """Levelwise growth; returns every frequent itemset with its sequence-index set."""
    n = len(stage_sets)

    item_tids: dict[str, set[int]] = {}
    for idx, items in enumerate(stage_sets):
        for item in items:
            item_tids.setdefault(item, set()).add(idx)

    level: dict[Itemset, frozenset[int]] = {}
    for item in sorted(item_tids):
        tids = frozenset(item_tids[item])
        if len(tids) / n >= min_support:
            level[(item,)] = tids

    frequent = dict(level)
    size = 1
    while level and size < max_size:
        keys = sorted(level)
        candidates: dict[Itemset, frozenset[int]] = {}
        for i, left in enumerate(keys):
            for right in keys[i + 1:]:
                if left[:-1] != right[:-1]:
                    break  # sorted keys keep shared prefixes contiguous
                candidate = left + (right[-1],)
                # Downward closure: every size-k subset must itself be frequent.
                if any(
                    candidate[:j] + candidate[j + 1:] not in level
                    for j in range(len(candidate) - 2)
                ):
                    continue
                tids = level[left] & level[right]
                if len(tids) / n >= min_support:
                    candidates[candidate] = frozenset(tids)
        frequent.update(candidates)
        level = candidates
        size += 1
    return frequent


def mine_frequent_stage_itemsets(
    sequences: list[PatientSequence],
    stage: Stage,
    min_support: float,
    max_size: int = 4,
) -> list[tuple[frozenset[str], float]]:
    """Every itemset contained in >= min_support of the stage sets, up to max_size."""
    if not sequences:
        raise ValueError("cannot mine an empty sequence list")
    if not 0.0 < min_support <= 1.0:
        raise ValueError("min_support must be in (0, 1]")
    n = len(sequences)
    frequent = _frequent_itemsets(_stage_sets(sequences, stage), min_support, max_size)
    return [
        (frozenset(itemset), len(frequent[itemset]) / n)
        for itemset in sorted(frequent, key=lambda it: (len(it), it))
    ]


def mine_rules(
    sequences: list[PatientSequence], params: MiningParams
) -> tuple[list[SequentialRule], list[SequentialRule]]:
    """Returns (candidates passing support+confidence, subset also passing lift)."""
    if not sequences:
        raise ValueError("cannot mine an empty sequence list")
    n = len(sequences)
    acute = _frequent_itemsets(
        _stage_sets(sequences, Stage.ACUTE), params.min_support, params.max_itemset_size
    )
    late = _frequent_itemsets(
        _stage_sets(sequences, Stage.LATE), params.min_support, params.max_itemset_size
    )

    candidates: list[SequentialRule] = []
    filtered: list[SequentialRule] = []
    for x_items in sorted(acute, key=lambda it: (len(it), it)):
        x_tids = acute[x_items]
        for y_items in sorted(late, key=lambda it: (len(it), it)):
            y_tids = late[y_items]
            joint = x_tids & y_tids
            support = len(joint) / n
            if support < params.min_support:
                continue
            confidence = len(joint) / len(x_tids)
            if confidence < params.min_confidence:
                continue
            lift = (len(joint) * n) / (len(x_tids) * len(y_tids))
            rule = SequentialRule(
                antecedent=frozenset(x_items),
                consequent=frozenset(y_items),
                support=support,
                confidence=confidence,
                lift=lift,
                supporters=tuple(sorted(sequences[i].patient_id for i in joint)),
            )
            candidates.append(rule)
            if lift > params.min_lift:
                filtered.append(rule)
    return candidates, filtered


def generate_rules(
    sequences: list[PatientSequence], params: MiningParams | None = None
) -> list[SequentialRule]:
    """Rules passing support, confidence, and the strict lift bound."""
    return mine_rules(sequences, params or MiningParams())[1]


def generate_candidate_rules(
    sequences: list[PatientSequence], params: MiningParams | None = None
) -> list[SequentialRule]:
    """Pre-lift-filter rules (support and confidence only); drives the
    unpredicted-late-symptom listing downstream."""
    return mine_rules(sequences, params or MiningParams())[0]


def supporting_patients(
    rule_shape: tuple[frozenset[str] | set[str], frozenset[str] | set[str]],
    sequences: list[PatientSequence],
) -> set[str]:
    antecedent, consequent = (frozenset(part) for part in rule_shape)
    if not antecedent or not consequent:
        raise ValueError("antecedent and consequent must be non-empty")
    return {
        seq.patient_id
        for seq in sequences
        if antecedent <= seq.acute_set and consequent <= seq.late_set
    }


class SequentialRuleMiner(BaseEstimator):
    """Estimator wrapper: fit on sequences, expose rules_ and the pre-lift set."""

    def __init__(
        self,
        min_support: float = 0.30,
        min_confidence: float = 0.50,
        min_lift: float = 1.0,
        max_itemset_size: int = 4,
    ):
        self.min_support = min_support
        self.min_confidence = min_confidence
        self.min_lift = min_lift
        self.max_itemset_size = max_itemset_size

    def _params(self) -> MiningParams:
        return MiningParams(
            min_support=self.min_support,
            min_confidence=self.min_confidence,
            min_lift=self.min_lift,
            max_itemset_size=self.max_itemset_size,
        )

    def fit(self, X: list[PatientSequence], y=None) -> "SequentialRuleMiner":
        params = self._params()
        self.n_sequences_ = len(X)
        self.unfiltered_rules_, self.rules_ = mine_rules(X, params)
        self.frequent_acute_ = mine_frequent_stage_itemsets(
            X, Stage.ACUTE, params.min_support, params.max_itemset_size
        )
        self.frequent_late_ = mine_frequent_stage_itemsets(
            X, Stage.LATE, params.min_support, params.max_itemset_size
        )
        return self

    def predict(self, X: list[PatientSequence]) -> list[tuple[str, ...]]:
        """Late symptoms implied for each sequence by the fitted rules'
        antecedents matching its acute set."""
        if not hasattr(self, "rules_"):
            raise NotFittedError("SequentialRuleMiner is not fitted")
        out = []
        for seq in X:
            implied: set[str] = set()
            for rule in self.rules_:
                if rule.antecedent <= seq.acute_set:
                    implied |= rule.consequent
            out.append(tuple(sorted(implied)))
        return out
