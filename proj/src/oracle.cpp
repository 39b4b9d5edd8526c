#include "minari/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "minari/bounds.hpp"
#include "minari/errors.hpp"

namespace minari::oracle {

namespace {

// Keeps N^2 within int64 and cross-multiplied ARI terms within 128 bits.
constexpr std::int64_t kMaxObjects = 10000;
constexpr std::int64_t kMaxCells = 4096;

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// Matrices with `cells` free entries and total n.
BigInt unconstrained_count(std::int64_t n, std::int64_t cells, bool zero_one) {
    if (cells == 0) return n == 0 ? 1 : 0;
    return zero_one ? binomial(cells, n) : binomial(n + cells - 1, cells - 1);
}

struct Witness {
    std::int64_t n;
    std::vector<Count> entries;
};

// ARI as num/den with den > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

__extension__ using Wide = __int128;

int compare(const Fraction& x, const Fraction& y) {
    const Wide lhs = static_cast<Wide>(x.num) * y.den;
    const Wide rhs = static_cast<Wide>(y.num) * x.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct PartialMin {
    bool has_best = false;
    Fraction best;
    std::vector<Witness> witnesses;
    std::uint64_t scanned = 0;
    std::uint64_t undefined = 0;

    void offer(const Fraction& value, std::int64_t n, const std::vector<Count>& entries) {
        const int c = has_best ? compare(value, best) : -1;
        if (c > 0) return;
        if (c < 0) {
            has_best = true;
            best = value;
            witnesses.clear();
        }
        witnesses.push_back({n, entries});
    }

    // Associative: folding partials in task order reproduces the sequential scan.
    void merge(PartialMin&& other) {
        scanned += other.scanned;
        undefined += other.undefined;
        if (!other.has_best) return;
        const int c = has_best ? compare(other.best, best) : -1;
        if (c > 0) return;
        if (c < 0) {
            has_best = true;
            best = other.best;
            witnesses.clear();
        }
        std::move(other.witnesses.begin(), other.witnesses.end(), std::back_inserter(witnesses));
    }
};

// Depth-first walk over row-major cells with incremental marginals.
class Walker {
public:
    Walker(std::int64_t r, std::int64_t s, bool zero_one)
        : r_(static_cast<std::size_t>(r)),
          s_(static_cast<std::size_t>(s)),
          zero_one_(zero_one),
          cells_(r_ * s_, 0),
          row_sum_(r_, 0),
          col_sum_(s_, 0),
          zero_cols_(s_) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return s_; }
    const std::vector<Count>& cells() const { return cells_; }
    const std::vector<Count>& row_sums() const { return row_sum_; }
    const std::vector<Count>& col_sums() const { return col_sum_; }
    std::int64_t cells_sq() const { return cells_sq_; }

    void reset() {
        std::fill(cells_.begin(), cells_.end(), 0);
        std::fill(row_sum_.begin(), row_sum_.end(), 0);
        std::fill(col_sum_.begin(), col_sum_.end(), 0);
        cells_sq_ = 0;
        zero_cols_ = s_;
    }

    void load_first_row(const std::vector<Count>& row) {
        reset();
        for (std::size_t j = 0; j < s_; ++j) place(j, row[j]);
    }

    // Calls leaf(*this, remaining) each time cell index `stop` is reached.
    template <class Leaf>
    void descend(std::size_t k, std::int64_t remaining, std::size_t stop, Leaf& leaf) {
        if (k == stop) {
            leaf(*this, remaining);
            return;
        }
        const std::size_t i = k / s_;
        const std::size_t j = k % s_;
        const bool last_in_row = j + 1 == s_;
        const bool last_row = i + 1 == r_;
        std::int64_t lo = 0;
        if ((last_in_row && row_sum_[i] == 0) || (last_row && col_sum_[j] == 0)) lo = 1;
        std::int64_t hi = zero_one_ ? std::min<std::int64_t>(1, remaining) : remaining;
        if (k + 1 == r_ * s_) {
            if (remaining < lo || remaining > hi) return;
            lo = hi = remaining;
        }
        const auto cells_after = static_cast<std::int64_t>(r_ * s_ - k - 1);
        for (std::int64_t v = lo; v <= hi; ++v) {
            const std::int64_t rest = remaining - v;
            const bool row_open = !last_in_row && row_sum_[i] + static_cast<Count>(v) == 0;
            const auto rows_need = static_cast<std::int64_t>(r_ - 1 - i) + (row_open ? 1 : 0);
            const auto cols_need =
                static_cast<std::int64_t>(zero_cols_) - ((v > 0 && col_sum_[j] == 0) ? 1 : 0);
            if (rest < std::max(rows_need, cols_need)) {
                if (v > 0) break;
                continue;
            }
            if (zero_one_ && rest > cells_after) continue;
            place(k, static_cast<Count>(v));
            descend(k + 1, rest, stop, leaf);
            unplace(k);
        }
    }

private:
    void place(std::size_t k, Count v) {
        const std::size_t i = k / s_;
        const std::size_t j = k % s_;
        cells_[k] = v;
        row_sum_[i] += v;
        if (v > 0 && col_sum_[j] == 0) --zero_cols_;
        col_sum_[j] += v;
        cells_sq_ += static_cast<std::int64_t>(v * v);
    }

    void unplace(std::size_t k) {
        const std::size_t i = k / s_;
        const std::size_t j = k % s_;
        const Count v = cells_[k];
        cells_[k] = 0;
        row_sum_[i] -= v;
        col_sum_[j] -= v;
        if (v > 0 && col_sum_[j] == 0) ++zero_cols_;
        cells_sq_ -= static_cast<std::int64_t>(v * v);
    }

    std::size_t r_;
    std::size_t s_;
    bool zero_one_;
    std::vector<Count> cells_;
    std::vector<Count> row_sum_;
    std::vector<Count> col_sum_;
    std::int64_t cells_sq_ = 0;
    std::size_t zero_cols_;
};

struct Task {
    std::int64_t n;
    std::vector<Count> first_row;
    std::int64_t remaining;
};

// Work units in enumeration order: one per (total, first row).
std::vector<Task> split_by_first_row(const EnumerationSpec& spec) {
    std::vector<Task> tasks;
    Walker walker(spec.r, spec.s, spec.zero_one_only);
    for (std::int64_t n = spec.n_min(); n <= spec.n_max; ++n) {
        auto collect = [&](const Walker& w, std::int64_t remaining) {
            tasks.push_back({n, std::vector<Count>(w.cells().begin(), w.cells().begin() + spec.s), remaining});
        };
        walker.reset();
        walker.descend(0, n, static_cast<std::size_t>(spec.s), collect);
    }
    return tasks;
}

void check_budget(const EnumerationSpec& spec, std::uint64_t budget) {
    const BigInt size = space_size(spec);
    if (size > budget)
        throw ResourceError("search space of " + size.str() + " tables (" + std::to_string(spec.r) + "x" +
                            std::to_string(spec.s) + ", n <= " + std::to_string(spec.n_max) +
                            (spec.zero_one_only ? ", zero-one" : "") + ") exceeds the budget of " +
                            std::to_string(budget));
}

PartialMin scan_task(const EnumerationSpec& spec, const Task& task) {
    PartialMin partial;
    Walker walker(spec.r, spec.s, spec.zero_one_only);
    walker.load_first_row(task.first_row);
    const std::int64_t n = task.n;
    const std::int64_t pairs = n * (n - 1) / 2;
    auto leaf = [&](const Walker& w, std::int64_t) {
        ++partial.scanned;
        std::int64_t rows_sq = 0;
        std::int64_t cols_sq = 0;
        for (Count v : w.row_sums()) rows_sq += static_cast<std::int64_t>(v * v);
        for (Count v : w.col_sums()) cols_sq += static_cast<std::int64_t>(v * v);
        const std::int64_t a = (w.cells_sq() - n) / 2;
        const std::int64_t b = (rows_sq - w.cells_sq()) / 2;
        const std::int64_t c = (cols_sq - w.cells_sq()) / 2;
        const std::int64_t d = pairs - a - b - c;
        const std::int64_t chance = (a + b) * (a + c) + (c + d) * (b + d);
        const std::int64_t den = pairs * pairs - chance;
        if (den == 0) {
            ++partial.undefined;
            return;
        }
        partial.offer({pairs * (a + d) - chance, den}, n, w.cells());
    };
    walker.descend(static_cast<std::size_t>(spec.s), task.remaining, walker.cells().size(), leaf);
    return partial;
}

}  // namespace

void EnumerationSpec::validate() const {
    if (r < 1 || s < 1)
        throw InputError("cluster counts must be >= 1");
    if (r == 1 && s == 1)
        throw InputError("no table with r = s = 1 has a defined ARI");
    if (r * s > kMaxCells)
        throw InputError("r*s = " + std::to_string(r * s) + " exceeds the enumeration limit of " +
                         std::to_string(kMaxCells) + " cells");
    if (n_max < n_min())
        throw InputError("n_max = " + std::to_string(n_max) + " is below max(r,s) = " + std::to_string(n_min()));
    if (n_max > kMaxObjects)
        throw InputError("n_max = " + std::to_string(n_max) + " exceeds " + std::to_string(kMaxObjects));
    if (zero_one_only && n_max > r * s)
        throw InputError("zero-one enumeration needs n_max <= r*s = " + std::to_string(r * s));
}

BigInt space_size(const EnumerationSpec& spec) {
    spec.validate();
    BigInt total = 0;
    for (std::int64_t n = spec.n_min(); n <= spec.n_max; ++n) {
        for (std::int64_t i = 0; i <= spec.r; ++i) {
            for (std::int64_t j = 0; j <= spec.s; ++j) {
                const BigInt term = binomial(spec.r, i) * binomial(spec.s, j) *
                                    unconstrained_count(n, (spec.r - i) * (spec.s - j), spec.zero_one_only);
                if ((i + j) % 2 == 0)
                    total += term;
                else
                    total -= term;
            }
        }
    }
    return total;
}

void enumerate_tables(const EnumerationSpec& spec, const std::function<void(const ContingencyTable&)>& visit) {
    spec.validate();
    Walker walker(spec.r, spec.s, spec.zero_one_only);
    auto leaf = [&](const Walker& w, std::int64_t) {
        visit(ContingencyTable(w.rows(), w.cols(), w.cells()));
    };
    for (std::int64_t n = spec.n_min(); n <= spec.n_max; ++n) {
        walker.reset();
        walker.descend(0, n, walker.cells().size(), leaf);
    }
}

OracleResult brute_force_min_ari(const EnumerationSpec& spec, const OracleOptions& options) {
    spec.validate();
    check_budget(spec, options.budget);

    const std::vector<Task> tasks = split_by_first_row(spec);
    std::vector<PartialMin> partials(tasks.size());
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) partials[t] = scan_task(spec, tasks[t]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < tasks.size(); t = next++) partials[t] = scan_task(spec, tasks[t]);
            });
        pool.clear();
    }

    PartialMin total;
    for (auto& partial : partials) total.merge(std::move(partial));
    if (!total.has_best)
        throw InputError("no table in the swept range has a defined ARI");

    OracleResult result;
    result.best_ari = ExactRatio(BigInt(total.best.num), BigInt(total.best.den));
    result.tables_scanned = total.scanned;
    result.undefined_skipped = total.undefined;
    result.n_lo = spec.n_min();
    result.n_hi = spec.n_max;
    for (auto& w : total.witnesses) {
        if (result.n_at_optimum.empty() || result.n_at_optimum.back() != w.n) result.n_at_optimum.push_back(w.n);
        result.best_tables.emplace_back(static_cast<std::size_t>(spec.r), static_cast<std::size_t>(spec.s),
                                        std::move(w.entries));
    }
    return result;
}

bool same_up_to_permutation(const ContingencyTable& a, const ContingencyTable& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.total() != b.total()) return false;
    auto sorted = [](std::span<const Count> v) {
        std::vector<Count> out(v.begin(), v.end());
        std::sort(out.begin(), out.end());
        return out;
    };
    if (sorted(a.row_totals()) != sorted(b.row_totals()) || sorted(a.col_totals()) != sorted(b.col_totals()))
        return false;

    auto columns_of = [](const ContingencyTable& t, const std::vector<std::size_t>& row_order) {
        std::vector<std::vector<Count>> cols(t.cols(), std::vector<Count>(t.rows()));
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j) cols[j][i] = t.at(row_order[i], j);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    std::vector<std::size_t> identity(b.rows());
    std::iota(identity.begin(), identity.end(), 0);
    const auto target = columns_of(b, identity);

    std::vector<std::size_t> order = identity;
    do {
        if (columns_of(a, order) == target) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

TheoremVerdict verify_theorem(std::int64_t r, std::int64_t s, std::int64_t n_max, bool zero_one_only,
                              const OracleOptions& options) {
    const EnumerationSpec spec{r, s, n_max, zero_one_only};
    TheoremVerdict verdict;
    verdict.r = r;
    verdict.s = s;
    verdict.zero_one_only = zero_one_only;
    verdict.oracle = brute_force_min_ari(spec, options);

    const BoundReport bound = extremal_table(r, s);
    verdict.closed_form = bound.min_ari;
    verdict.extremal_n = std::min(r, s) >= 2 ? r + s - 1 : std::max(r, s);

    bool pass = true;
    if (verdict.oracle.best_ari != verdict.closed_form) {
        pass = false;
        verdict.diagnostics.push_back("oracle minimum " + verdict.oracle.best_ari.to_string() +
                                      " differs from closed form " + verdict.closed_form.to_string());
    }
    const auto& ns = verdict.oracle.n_at_optimum;
    if (std::find(ns.begin(), ns.end(), verdict.extremal_n) == ns.end()) {
        pass = false;
        verdict.diagnostics.push_back("optimum not attained at n = " + std::to_string(verdict.extremal_n));
    }
    for (const auto& table : verdict.oracle.best_tables) {
        if (static_cast<std::int64_t>(table.total()) != verdict.extremal_n) continue;
        ++verdict.witnesses_at_extremal_n;
        if (!same_up_to_permutation(table, bound.witness)) {
            pass = false;
            verdict.diagnostics.push_back("witness is not a permutation of the extremal table:\n" + to_string(table));
        }
    }
    verdict.pass = pass;
    return verdict;
}

LemmaVerdict verify_lemma1(std::int64_t p, std::int64_t total, std::int64_t floor_value, std::uint64_t budget) {
    if (p < 1)
        throw InputError("lemma instance needs p >= 1");
    if (total < p * floor_value)
        throw InputError("total " + std::to_string(total) + " is below p * floor = " + std::to_string(p * floor_value));
    const std::int64_t surplus = total - p * floor_value;
    const BigInt points = binomial(surplus + p - 1, p - 1);
    if (points > budget)
        throw ResourceError("lemma search space of " + points.str() + " integer points exceeds the budget of " +
                            std::to_string(budget));

    LemmaVerdict verdict;
    verdict.p = p;
    verdict.total = total;
    verdict.floor_value = floor_value;
    const std::int64_t top = total - (p - 1) * floor_value;
    verdict.closed_form = BigInt(top) * top + BigInt(p - 1) * floor_value * floor_value;

    // Lexicographic walk over compositions of the surplus into p parts.
    std::vector<std::int64_t> x(static_cast<std::size_t>(p), floor_value);
    bool have = false;
    auto visit = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
        if (k + 1 == x.size()) {
            x[k] = floor_value + left;
            ++verdict.points_scanned;
            BigInt sq = 0;
            for (std::int64_t v : x) sq += BigInt(v) * v;
            if (!have || sq > verdict.max_found) {
                have = true;
                verdict.max_found = sq;
                verdict.argmax.clear();
            }
            if (sq == verdict.max_found) verdict.argmax.push_back(x);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            x[k] = floor_value + v;
            self(self, k + 1, left - v);
        }
    };
    visit(visit, 0, surplus);

    bool pass = true;
    if (verdict.max_found != verdict.closed_form) {
        pass = false;
        verdict.diagnostics.push_back("enumerated maximum " + verdict.max_found.str() + " differs from closed form " +
                                      verdict.closed_form.str());
    }
    std::vector<std::int64_t> stated(static_cast<std::size_t>(p), floor_value);
    stated[0] = top;
    if (std::find(verdict.argmax.begin(), verdict.argmax.end(), stated) == verdict.argmax.end()) {
        pass = false;
        verdict.diagnostics.push_back("stated maximizer does not attain the enumerated maximum");
    }
    const SumSquaresMax rational = max_sum_squares(
        LemmaInstance{std::vector<ExactRatio>(static_cast<std::size_t>(p), ExactRatio(floor_value)), ExactRatio(total)});
    if (rational.value != ExactRatio(verdict.max_found)) {
        pass = false;
        verdict.diagnostics.push_back("max_sum_squares returned " + rational.value.to_string());
    }
    verdict.pass = pass;
    return verdict;
}

}  // namespace minari::oracle
