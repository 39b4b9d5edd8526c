#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minari/exact_ratio.hpp"
#include "minari/partition.hpp"

namespace minari::oracle {

/// Search space: every r x s non-negative integer matrix without zero rows or
/// columns whose total lies in [max(r,s), n_max].
struct EnumerationSpec {
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t n_max = 0;
    /// Restrict entries to {0, 1}; then n_max may not exceed r*s.
    bool zero_one_only = false;

    std::int64_t n_min() const { return r > s ? r : s; }
    /// Throws InputError for an infeasible or oversized spec.
    void validate() const;
};

struct OracleOptions {
    /// Hard cap on the number of tables in the search space.
    std::uint64_t budget = 100'000'000;
    /// Worker threads; 1 runs everything on the calling thread.
    unsigned threads = 1;
};

struct OracleResult {
    ExactRatio best_ari;
    /// Every table attaining best_ari, ordered by total then row-major lexicographically.
    std::vector<ContingencyTable> best_tables;
    std::uint64_t tables_scanned = 0;
    /// Tables skipped because their ARI is undefined (e.g. two identical all-singleton partitions).
    std::uint64_t undefined_skipped = 0;
    /// Ascending.
    std::vector<std::int64_t> n_at_optimum;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;

    friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

/// Exact number of tables enumerate_tables() visits for the spec, by
/// inclusion-exclusion over empty rows and columns.
BigInt space_size(const EnumerationSpec& spec);

/// Visits every table of the spec exactly once: grouped by ascending total,
/// lexicographically ascending over row-major entries within a total.
void enumerate_tables(const EnumerationSpec& spec, const std::function<void(const ContingencyTable&)>& visit);

/// Exhaustive minimum ARI over the spec's space. Throws ResourceError when
/// space_size(spec) exceeds the budget. Output does not depend on threads.
OracleResult brute_force_min_ari(const EnumerationSpec& spec, const OracleOptions& options = {});

/// True iff `b` is obtained from `a` by permuting rows and columns.
bool same_up_to_permutation(const ContingencyTable& a, const ContingencyTable& b);

struct TheoremVerdict {
    bool pass = false;
    std::int64_t r = 0;
    std::int64_t s = 0;
    bool zero_one_only = false;
    OracleResult oracle;
    ExactRatio closed_form;
    std::int64_t extremal_n = 0;
    std::size_t witnesses_at_extremal_n = 0;
    std::vector<std::string> diagnostics;
};

/// Checks the closed-form minimum against the oracle over n in [max(r,s), n_max]:
/// equal minima, optimum reached at n = r+s-1, and every witness at that n a
/// row/column permutation of the canonical extremal table. A mismatch is a
/// failing verdict, not an exception.
TheoremVerdict verify_theorem(std::int64_t r, std::int64_t s, std::int64_t n_max, bool zero_one_only = false,
                              const OracleOptions& options = {});

struct LemmaVerdict {
    bool pass = false;
    std::int64_t p = 0;
    std::int64_t total = 0;
    std::int64_t floor_value = 0;
    std::uint64_t points_scanned = 0;
    BigInt max_found;
    BigInt closed_form;
    /// Integer points attaining max_found, lexicographically ascending.
    std::vector<std::vector<std::int64_t>> argmax;
    std::vector<std::string> diagnostics;
};

/// Exhaustive check of the sum-of-squares maximizer on the integer points of
/// {x : sum x_i = total, x_i >= floor_value}.
LemmaVerdict verify_lemma1(std::int64_t p, std::int64_t total, std::int64_t floor_value,
                           std::uint64_t budget = 100'000'000);

}  // namespace minari::oracle
