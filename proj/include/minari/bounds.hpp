#pragma once

#include <cstdint>
#include <vector>

#include "minari/exact_ratio.hpp"
#include "minari/partition.hpp"

namespace minari {

/// Minimum attainable ARI for clusterings of sizes r and s, with the
/// contingency table that attains it.
struct BoundReport {
    std::int64_t r = 0;
    std::int64_t s = 0;
    ExactRatio min_ari;
    /// r+s-1 when min(r,s) >= 2, otherwise max(r,s).
    std::int64_t witness_n = 0;
    ContingencyTable witness;
    PairCounts witness_pair_counts;
};

/// Exact lower bound on the ARI over every pair of clusterings with r and s
/// clusters, for any number of objects. Zero when min(r,s) = 1.
///
/// Throws InputError for r < 1 or s < 1 and UndefinedIndexError for r = s = 1.
ExactRatio min_ari(std::int64_t r, std::int64_t s);

/// -r/(3r-2); equal to min_ari(r, r). Requires r >= 2.
ExactRatio min_ari_equal_sizes(std::int64_t r);

/// Large-size approximation -2r^2 s^2 / (r^4 + 2r^3 s + 2rs^3 + s^4), obtained
/// by replacing C(k,2) with k^2/2. Requires r, s >= 2.
ExactRatio approx_min_ari(std::int64_t r, std::int64_t s);

/// Canonical extremal table: first row and first column all ones, zero
/// elsewhere, over r+s-1 objects (a vector of ones when min(r,s) = 1).
/// Any row/column permutation of it is equally extremal.
///
/// Throws ResourceError when the r x s table is too large to materialize.
BoundReport extremal_table(std::int64_t r, std::int64_t s);

/// (1 - ARI) / (1 - min_ari(r, s)): 0 at perfect agreement, 1 at the minimum.
ExactRatio normalized_ard(const PairCounts& p, std::int64_t r, std::int64_t s);
/// Uses the table's own shape for (r, s).
ExactRatio normalized_ard(const ContingencyTable& table);
/// Throws InputError when (r, s) disagrees with the table's shape.
ExactRatio normalized_ard(const ContingencyTable& table, std::int64_t r, std::int64_t s);

struct NormalizedArd {
    ExactRatio value;
    /// The supplied ARI lies below min_ari(r, s), so value > 1.
    bool below_minimum = false;
};

/// Normalizes an externally reported ARI. Nothing is clamped.
NormalizedArd normalized_ard_from_ari(const ExactRatio& ari, std::int64_t r, std::int64_t s);

/// Region {x : sum x_i = total, x_i >= floors[i]} with floors non-increasing.
struct LemmaInstance {
    std::vector<ExactRatio> floors;
    ExactRatio total;

    std::size_t p() const { return floors.size(); }
    /// Throws InputError if floors are empty or unsorted, or total < sum of floors.
    void validate() const;
};

struct SumSquaresMax {
    std::vector<ExactRatio> maximizer;
    ExactRatio value;
};

/// Maximum of sum x_i^2 over the instance's region: all surplus goes to the
/// coordinate with the largest floor, the rest sit at their floors.
SumSquaresMax max_sum_squares(const LemmaInstance& inst);

}  // namespace minari
