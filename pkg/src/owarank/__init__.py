"""Consensus ranking with ordered weighted averaging.

Fuses several rankers' ordered lists into one ranking using OWA with fuzzy
quantifier weights or rank-proportional most-preferred-first weights, and
scores rankings against a ground truth.
"""

from .aggregation import (
    AggregatedRanking,
    MethodSpec,
    PasConfig,
    ScoreMatrix,
    aggregate_course,
    build_score_matrix,
    owa_aggregate,
    parse_method,
    pas_aggregate,
    pas_score,
    rank_items,
)
from .dataset import (
    CourseRanking,
    GroundTruth,
    ParseError,
    RankerRoster,
    RankingDataset,
    distinct_items,
    load_dataset,
    load_ground_truths,
    parse_csv,
    validate_dataset,
)
from .harness import ComparisonReport, aggregate_dataset, compare, evaluate_ranking
from .metrics import (
    EvaluationReport,
    RankedPair,
    evaluate,
    fnr_at_k,
    fpr_at_k,
    mean_absolute_error,
    mean_average_precision,
    mean_reciprocal_rank,
    modified_spearman,
    precision_at_k,
    reciprocal_rank,
    root_mean_square_error,
)
from .weighting import (
    AS_MANY_AS_POSSIBLE,
    AT_LEAST_HALF,
    MOST,
    QUANTIFIERS,
    Quantifier,
    WeightVector,
    most_preferred_first_weights,
    quantifier_membership,
    quantifier_weights,
)

__version__ = "0.1.0"
