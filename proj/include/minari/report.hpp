#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minari/bounds.hpp"
#include "minari/errors.hpp"
#include "minari/exact_ratio.hpp"
#include "minari/oracle.hpp"
#include "minari/partition.hpp"

namespace minari {

/// Malformed input file; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public InputError {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One label per line, surrounding whitespace trimmed.
std::vector<std::string> read_label_lines(std::istream& in, const std::string& source);

struct KeyedLabel {
    std::string id;
    std::string label;
};

/// Two-column `id,label` CSV; an `id,label` header line is skipped.
std::vector<KeyedLabel> read_label_csv(std::istream& in, const std::string& source);

/// Pairs labels by id, in the order of `a`. Both files must carry the same ids.
std::pair<Clustering, Clustering> join_by_id(const std::vector<KeyedLabel>& a, const std::vector<KeyedLabel>& b);

/// Whitespace-separated non-negative integers, one row per line; blank lines
/// and `#` comments are ignored.
ContingencyTable read_table(std::istream& in, const std::string& source);

struct DisplayOptions {
    /// Significant digits of decimal renderings.
    int precision = 6;
    /// Suppress decimal renderings.
    bool exact_only = false;
};

/// "p/q (decimal)", or just "p/q" with exact_only.
std::string render(const ExactRatio& x, const DisplayOptions& opts);

struct ComparisonReport {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    ContingencyTable table;
    PairCounts pair_counts;
    ExactRatio ri;
    ExactRatio expected_ri;
    ExactRatio ari;
    ExactRatio ard;
    ExactRatio min_ari;
    ExactRatio normalized_ard;
    std::vector<std::string> warnings;
};

/// Throws UndefinedIndexError when the ARI of the table is undefined.
ComparisonReport compare_table(const ContingencyTable& table);

std::string to_text(const ComparisonReport& report, const DisplayOptions& opts);
nlohmann::json to_json(const ComparisonReport& report, const DisplayOptions& opts);
/// Inverse of to_json; decimals are ignored and exact fields re-parsed.
ComparisonReport comparison_from_json(const nlohmann::json& j);

std::string bound_text(std::int64_t r, std::int64_t s, const DisplayOptions& opts);
nlohmann::json bound_json(std::int64_t r, std::int64_t s, const DisplayOptions& opts);

/// Table rows preceded by `#` metric lines, so it reads back with read_table().
std::string extremal_text(const BoundReport& bound, const DisplayOptions& opts);
nlohmann::json extremal_json(const BoundReport& bound, const DisplayOptions& opts);

std::string verdict_text(const oracle::TheoremVerdict& verdict, const DisplayOptions& opts);
nlohmann::json verdict_json(const oracle::TheoremVerdict& verdict, const DisplayOptions& opts);

nlohmann::json table_json(const ContingencyTable& table);

}  // namespace minari
