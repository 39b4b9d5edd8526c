#include "minari/bounds.hpp"

#include <algorithm>
#include <string>

#include "minari/errors.hpp"

namespace minari {

namespace {

// Largest extremal table we are willing to allocate densely.
constexpr std::int64_t kMaxWitnessCells = std::int64_t{1} << 26;

void check_sizes(std::int64_t r, std::int64_t s) {
    if (r < 1 || s < 1)
        throw InputError("cluster counts must be >= 1 (got r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
    if (r == 1 && s == 1)
        throw UndefinedIndexError("adjusted Rand index undefined when both clusterings have a single cluster");
}

}  // namespace

ExactRatio min_ari(std::int64_t r, std::int64_t s) {
    check_sizes(r, s);
    if (std::min(r, s) == 1)
        return ExactRatio(0);
    const BigInt cr = choose2(BigInt(r));
    const BigInt cs = choose2(BigInt(s));
    const BigInt cn = choose2(BigInt(r) + s - 1);
    const ExactRatio inner = ExactRatio(1) - ExactRatio(cn, 2) * (ExactRatio(1, cr) + ExactRatio(1, cs));
    return ExactRatio(1) / inner;
}

ExactRatio min_ari_equal_sizes(std::int64_t r) {
    if (r < 2)
        throw InputError("equal-size bound needs r >= 2 (got " + std::to_string(r) + ")");
    return ExactRatio(BigInt(-r), BigInt(3) * r - 2);
}

ExactRatio approx_min_ari(std::int64_t r, std::int64_t s) {
    if (r < 2 || s < 2)
        throw InputError("approximation needs r, s >= 2 (got r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
    const BigInt R(r);
    const BigInt S(s);
    const BigInt num = -2 * R * R * S * S;
    const BigInt den = R * R * R * R + 2 * R * R * R * S + 2 * R * S * S * S + S * S * S * S;
    return ExactRatio(num, den);
}

BoundReport extremal_table(std::int64_t r, std::int64_t s) {
    check_sizes(r, s);
    if (r > kMaxWitnessCells / s)
        throw ResourceError("extremal table of " + std::to_string(r) + "x" + std::to_string(s) +
                            " cells is too large to materialize");
    const auto rows = static_cast<std::size_t>(r);
    const auto cols = static_cast<std::size_t>(s);
    std::vector<Count> entries(rows * cols, 0);
    if (std::min(r, s) == 1) {
        std::fill(entries.begin(), entries.end(), 1);
    } else {
        for (std::size_t j = 0; j < cols; ++j) entries[j] = 1;
        for (std::size_t i = 0; i < rows; ++i) entries[i * cols] = 1;
    }
    ContingencyTable table(rows, cols, std::move(entries));
    PairCounts counts = pair_counts(table);
    const auto n = static_cast<std::int64_t>(table.total());
    return BoundReport{r, s, min_ari(r, s), n, std::move(table), std::move(counts)};
}

ExactRatio normalized_ard(const PairCounts& p, std::int64_t r, std::int64_t s) {
    const ExactRatio floor = min_ari(r, s);
    return (ExactRatio(1) - adjusted_rand_index(p)) / (ExactRatio(1) - floor);
}

ExactRatio normalized_ard(const ContingencyTable& table) {
    return normalized_ard(pair_counts(table), static_cast<std::int64_t>(table.rows()),
                          static_cast<std::int64_t>(table.cols()));
}

ExactRatio normalized_ard(const ContingencyTable& table, std::int64_t r, std::int64_t s) {
    if (r != static_cast<std::int64_t>(table.rows()) || s != static_cast<std::int64_t>(table.cols()))
        throw InputError("sizes (" + std::to_string(r) + "," + std::to_string(s) + ") do not match the " +
                         std::to_string(table.rows()) + "x" + std::to_string(table.cols()) + " table");
    return normalized_ard(table);
}

NormalizedArd normalized_ard_from_ari(const ExactRatio& ari, std::int64_t r, std::int64_t s) {
    if (ari > ExactRatio(1))
        throw InputError("ARI cannot exceed 1 (got " + ari.to_string() + ")");
    const ExactRatio floor = min_ari(r, s);
    return NormalizedArd{(ExactRatio(1) - ari) / (ExactRatio(1) - floor), ari < floor};
}

void LemmaInstance::validate() const {
    if (floors.empty())
        throw InputError("lemma instance needs at least one coordinate");
    if (!std::is_sorted(floors.begin(), floors.end(), std::greater<>()))
        throw InputError("floors must be sorted non-increasing");
    ExactRatio sum;
    for (const auto& f : floors) sum += f;
    if (total < sum)
        throw InputError("total " + total.to_string() + " is below the sum of floors " + sum.to_string());
}

SumSquaresMax max_sum_squares(const LemmaInstance& inst) {
    inst.validate();
    ExactRatio rest;
    for (std::size_t i = 1; i < inst.p(); ++i) rest += inst.floors[i];

    SumSquaresMax out;
    out.maximizer = inst.floors;
    out.maximizer[0] = inst.total - rest;
    for (const auto& x : out.maximizer) out.value += x * x;
    return out;
}

}  // namespace minari
