#include "minari/partition.hpp"

#include <limits>
#include <sstream>
#include <unordered_map>

#include "minari/errors.hpp"

namespace minari {

Clustering::Clustering(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw InputError("a clustering needs at least one object");
    std::unordered_map<std::string, std::size_t> index;
    ids_.reserve(labels_.size());
    for (const auto& label : labels_) {
        auto [it, inserted] = index.try_emplace(label, distinct_.size());
        if (inserted)
            distinct_.push_back(label);
        ids_.push_back(it->second);
    }
}

ContingencyTable::ContingencyTable(std::size_t rows, std::size_t cols, std::vector<Count> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), row_totals_(rows, 0), col_totals_(cols, 0) {
    if (rows_ == 0 || cols_ == 0)
        throw InputError("contingency table must have at least one row and one column");
    if (entries_.size() != rows_ * cols_)
        throw InputError("contingency table has " + std::to_string(entries_.size()) + " entries, expected " +
                         std::to_string(rows_ * cols_));
    constexpr Count kMax = std::numeric_limits<Count>::max();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Count v = entries_[i * cols_ + j];
            if (v > kMax - total_)
                throw InputError("contingency table total overflows 64 bits");
            total_ += v;
            row_totals_[i] += v;
            col_totals_[j] += v;
        }
    }
    for (std::size_t i = 0; i < rows_; ++i)
        if (row_totals_[i] == 0)
            throw InputError("row " + std::to_string(i + 1) + " is empty (clusters must be non-empty)");
    for (std::size_t j = 0; j < cols_; ++j)
        if (col_totals_[j] == 0)
            throw InputError("column " + std::to_string(j + 1) + " is empty (clusters must be non-empty)");
}

ContingencyTable::ContingencyTable(std::initializer_list<std::initializer_list<Count>> rows)
    : ContingencyTable(from_rows(std::vector<std::vector<Count>>(rows.begin(), rows.end()))) {}

ContingencyTable ContingencyTable::from_rows(const std::vector<std::vector<Count>>& rows) {
    if (rows.empty())
        throw InputError("contingency table must have at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<Count> entries;
    entries.reserve(rows.size() * cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InputError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(cols));
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return ContingencyTable(rows.size(), cols, std::move(entries));
}

ContingencyTable ContingencyTable::transposed() const {
    std::vector<Count> out(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[j * rows_ + i] = at(i, j);
    return ContingencyTable(cols_, rows_, std::move(out));
}

ContingencyTable ContingencyTable::permuted(std::span<const std::size_t> row_order,
                                            std::span<const std::size_t> col_order) const {
    if (row_order.size() != rows_ || col_order.size() != cols_)
        throw InputError("permutation size does not match table shape");
    auto check = [](std::span<const std::size_t> order, std::size_t extent) {
        std::vector<bool> seen(extent, false);
        for (std::size_t k : order) {
            if (k >= extent || seen[k])
                throw InputError("row or column order is not a permutation");
            seen[k] = true;
        }
    };
    check(row_order, rows_);
    check(col_order, cols_);
    std::vector<Count> out;
    out.reserve(entries_.size());
    for (std::size_t i : row_order)
        for (std::size_t j : col_order)
            out.push_back(at(i, j));
    return ContingencyTable(rows_, cols_, std::move(out));
}

PairCounts PairCounts::from_counts(BigInt a, BigInt b, BigInt c, BigInt d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw InputError("pair counts must be non-negative");
    PairCounts p{std::move(a), std::move(b), std::move(c), std::move(d), 0};
    p.n_pairs = p.a + p.b + p.c + p.d;
    return p;
}

ContingencyTable contingency_from_labels(const Clustering& x, const Clustering& y) {
    if (x.n() != y.n())
        throw InputError("clusterings label different numbers of objects (" + std::to_string(x.n()) + " vs " +
                         std::to_string(y.n()) + ")");
    const std::size_t r = x.size();
    const std::size_t s = y.size();
    std::vector<Count> entries(r * s, 0);
    const auto& xi = x.cluster_ids();
    const auto& yi = y.cluster_ids();
    for (std::size_t k = 0; k < x.n(); ++k)
        ++entries[xi[k] * s + yi[k]];
    return ContingencyTable(r, s, std::move(entries));
}

PairCounts pair_counts(const ContingencyTable& table) {
    BigInt cells_sq = 0;
    BigInt rows_sq = 0;
    BigInt cols_sq = 0;
    for (Count v : table.entries()) cells_sq += BigInt(v) * v;
    for (Count v : table.row_totals()) rows_sq += BigInt(v) * v;
    for (Count v : table.col_totals()) cols_sq += BigInt(v) * v;
    const BigInt n = table.total();

    auto halve = [](const BigInt& twice, const char* name) {
        if (twice < 0 || (twice & 1) != 0)
            throw InternalError(std::string("pair count ") + name + " is not a non-negative integer");
        return BigInt(twice >> 1);
    };
    PairCounts p;
    p.a = halve(cells_sq - n, "a");
    p.b = halve(rows_sq - cells_sq, "b");
    p.c = halve(cols_sq - cells_sq, "c");
    p.d = halve(cells_sq + n * n - rows_sq - cols_sq, "d");
    p.n_pairs = p.a + p.b + p.c + p.d;
    if (p.n_pairs != choose2(n))
        throw InternalError("pair counts do not sum to C(n,2)");
    return p;
}

namespace {

void require_pairs(const PairCounts& p) {
    if (p.n_pairs == 0)
        throw UndefinedIndexError("index undefined for fewer than two objects");
}

BigInt chance_term(const PairCounts& p) {
    return (p.a + p.b) * (p.a + p.c) + (p.c + p.d) * (p.b + p.d);
}

}  // namespace

ExactRatio rand_index(const PairCounts& p) {
    require_pairs(p);
    return ExactRatio(p.a + p.d, p.n_pairs);
}

ExactRatio expected_rand_index(const PairCounts& p) {
    require_pairs(p);
    return ExactRatio(chance_term(p), p.n_pairs * p.n_pairs);
}

ExactRatio adjusted_rand_index(const PairCounts& p) {
    require_pairs(p);
    const BigInt chance = chance_term(p);
    const BigInt den = p.n_pairs * p.n_pairs - chance;
    if (den == 0)
        throw UndefinedIndexError("adjusted Rand index undefined: chance-corrected denominator is zero");
    return ExactRatio(p.n_pairs * (p.a + p.d) - chance, den);
}

ExactRatio adjusted_rand_distance(const PairCounts& p) {
    require_pairs(p);
    const BigInt den = (p.a + p.b) * (p.b + p.d) + (p.a + p.c) * (p.c + p.d);
    if (den == 0)
        throw UndefinedIndexError("adjusted Rand distance undefined: denominator is zero");
    return ExactRatio(p.n_pairs * (p.b + p.c), den);
}

bool is_a_zero(const ContingencyTable& table) {
    for (Count v : table.entries())
        if (v > 1) return false;
    return true;
}

bool is_d_zero(const ContingencyTable& table) {
    return table.rows() == 1 || table.cols() == 1;
}

std::string to_string(const ContingencyTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.rows(); ++i) {
        for (std::size_t j = 0; j < table.cols(); ++j) {
            if (j) os << ' ';
            os << table.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace minari
