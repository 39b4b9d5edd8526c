#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "minari/exact_ratio.hpp"

namespace minari {

using Count = std::uint64_t;

/// A labeling of n >= 1 objects. Labels are opaque tokens; the clusters are
/// the distinct labels, so none can be empty.
class Clustering {
public:
    explicit Clustering(std::vector<std::string> labels);

    std::size_t n() const { return labels_.size(); }
    /// Number of distinct labels.
    std::size_t size() const { return distinct_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Distinct labels in order of first appearance.
    const std::vector<std::string>& distinct_labels() const { return distinct_; }
    /// Per-object cluster index into distinct_labels().
    const std::vector<std::size_t>& cluster_ids() const { return ids_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::string> distinct_;
    std::vector<std::size_t> ids_;
};

/// r x s matrix of co-membership counts n_ij with positive marginals.
class ContingencyTable {
public:
    /// Row-major entries. Throws InputError on shape mismatch, an empty row or
    /// column, or a total that does not fit in 64 bits.
    ContingencyTable(std::size_t rows, std::size_t cols, std::vector<Count> entries);
    ContingencyTable(std::initializer_list<std::initializer_list<Count>> rows);
    static ContingencyTable from_rows(const std::vector<std::vector<Count>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Count at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    std::span<const Count> entries() const { return entries_; }
    std::span<const Count> row_totals() const { return row_totals_; }
    std::span<const Count> col_totals() const { return col_totals_; }
    Count total() const { return total_; }

    ContingencyTable transposed() const;
    /// Row i of the result is row row_order[i] of this table; likewise columns.
    ContingencyTable permuted(std::span<const std::size_t> row_order,
                              std::span<const std::size_t> col_order) const;

    friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Count> entries_;
    std::vector<Count> row_totals_;
    std::vector<Count> col_totals_;
    Count total_ = 0;
};

/// Pair-type tallies: a (together in both), b (together in the first only),
/// c (together in the second only), d (apart in both); n_pairs = a+b+c+d.
struct PairCounts {
    BigInt a;
    BigInt b;
    BigInt c;
    BigInt d;
    BigInt n_pairs;

    /// Throws InputError for negative counts.
    static PairCounts from_counts(BigInt a, BigInt b, BigInt c, BigInt d);

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Rows follow the first appearance of labels in `x`, columns in `y`.
ContingencyTable contingency_from_labels(const Clustering& x, const Clustering& y);

PairCounts pair_counts(const ContingencyTable& table);

/// (a+d)/N. Undefined for N = 0.
ExactRatio rand_index(const PairCounts& p);
/// {(a+b)(a+c) + (c+d)(b+d)} / N^2. Undefined for N = 0.
ExactRatio expected_rand_index(const PairCounts& p);
/// Undefined when N = 0 or the chance-corrected denominator vanishes.
ExactRatio adjusted_rand_index(const PairCounts& p);
/// N(b+c) / {(a+b)(b+d) + (a+c)(c+d)} = 1 - ARI.
ExactRatio adjusted_rand_distance(const PairCounts& p);

/// True iff every entry is 0 or 1 (equivalently a = 0).
bool is_a_zero(const ContingencyTable& table);
/// True iff min(r, s) = 1 (equivalently d = 0).
bool is_d_zero(const ContingencyTable& table);

std::string to_string(const ContingencyTable& table);

}  // namespace minari
