"""Exact Rand / adjusted Rand indices and minimum-ARI bounds for clusterings."""

from ._minari import (
    ResourceError,
    UndefinedIndexError,
    adjusted_rand_distance,
    adjusted_rand_index,
    approx_min_ari,
    brute_force_min_ari,
    compare,
    contingency_from_labels,
    expected_rand_index,
    extremal_table,
    max_sum_squares,
    min_ari,
    min_ari_equal_sizes,
    normalized_ard,
    normalized_ard_from_ari,
    pair_counts,
    rand_index,
    verify_lemma1,
    verify_theorem,
)

__all__ = [
    "ResourceError",
    "UndefinedIndexError",
    "adjusted_rand_distance",
    "adjusted_rand_index",
    "approx_min_ari",
    "brute_force_min_ari",
    "compare",
    "contingency_from_labels",
    "expected_rand_index",
    "extremal_table",
    "max_sum_squares",
    "min_ari",
    "min_ari_equal_sizes",
    "normalized_ard",
    "normalized_ard_from_ari",
    "pair_counts",
    "rand_index",
    "verify_lemma1",
    "verify_theorem",
]
