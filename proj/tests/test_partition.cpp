#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "minari/errors.hpp"
#include "minari/partition.hpp"
#include "table_gen.hpp"

using namespace minari;

namespace {

const ContingencyTable kThirteen{
    {1, 0, 1, 1, 0}, {0, 1, 0, 0, 1}, {1, 0, 1, 0, 1}, {0, 1, 0, 1, 0}, {1, 0, 1, 0, 1}};

// Independent tally over explicit object pairs.
PairCounts pairs_by_enumeration(const ContingencyTable& t) {
    std::vector<std::pair<std::size_t, std::size_t>> objects;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            for (Count k = 0; k < t.at(i, j); ++k) objects.emplace_back(i, j);
    std::int64_t a = 0, b = 0, c = 0, d = 0;
    for (std::size_t u = 0; u < objects.size(); ++u)
        for (std::size_t v = u + 1; v < objects.size(); ++v) {
            const bool same_x = objects[u].first == objects[v].first;
            const bool same_y = objects[u].second == objects[v].second;
            (same_x ? (same_y ? a : b) : (same_y ? c : d)) += 1;
        }
    return PairCounts::from_counts(a, b, c, d);
}

std::vector<std::string> labels(std::initializer_list<const char*> xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("clustering") {
    const Clustering c(labels({"b", "a", "b", "c"}));
    CHECK(c.n() == 4);
    CHECK(c.size() == 3);
    CHECK(c.distinct_labels() == labels({"b", "a", "c"}));
    CHECK(c.cluster_ids() == std::vector<std::size_t>{0, 1, 0, 2});
    CHECK_THROWS_AS(Clustering({}), InputError);
}

TEST_CASE("contingency table validation") {
    CHECK_THROWS_AS(ContingencyTable({{1, 0}, {0, 0}}), InputError);
    CHECK_THROWS_AS(ContingencyTable({{1, 0}, {1, 0}}), InputError);
    CHECK_THROWS_AS(ContingencyTable(2, 2, {1, 1, 1}), InputError);
    CHECK_THROWS_AS(ContingencyTable::from_rows({{1, 1}, {1}}), InputError);
    CHECK_THROWS_AS(ContingencyTable(1, 2, {~Count{0}, 1}), InputError);
    const ContingencyTable t{{1, 2}, {3, 0}};
    CHECK(t.total() == 6);
    CHECK(std::vector<Count>(t.row_totals().begin(), t.row_totals().end()) == std::vector<Count>{3, 3});
    CHECK(std::vector<Count>(t.col_totals().begin(), t.col_totals().end()) == std::vector<Count>{4, 2});
    CHECK(t.transposed() == ContingencyTable{{1, 3}, {2, 0}});
    const std::vector<std::size_t> swap{1, 0};
    CHECK(t.permuted(swap, swap) == ContingencyTable{{0, 3}, {2, 1}});
    const std::vector<std::size_t> repeated{0, 0};
    CHECK_THROWS_AS(t.permuted(repeated, swap), InputError);
}

TEST_CASE("contingency_from_labels") {
    CHECK(contingency_from_labels(Clustering(labels({"1", "1", "2"})), Clustering(labels({"1", "2", "2"}))) ==
          ContingencyTable{{1, 1}, {0, 1}});
    CHECK(contingency_from_labels(Clustering(labels({"1", "2", "3"})), Clustering(labels({"1", "2", "3"}))) ==
          ContingencyTable{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(contingency_from_labels(Clustering(labels({"1", "2"})), Clustering(labels({"1"}))), InputError);

    // The diagonal of the 13-object example is all ones; listing those objects
    // first makes first-appearance order match the printed rows and columns.
    std::vector<std::string> x, y;
    for (std::size_t i = 0; i < 5; ++i) {
        x.push_back("C" + std::to_string(i));
        y.push_back("D" + std::to_string(i));
    }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j && kThirteen.at(i, j) == 1) {
                x.push_back("C" + std::to_string(i));
                y.push_back("D" + std::to_string(j));
            }
    CHECK(x.size() == 13);
    CHECK(contingency_from_labels(Clustering(x), Clustering(y)) == kThirteen);
}

TEST_CASE("pair_counts") {
    CHECK(pair_counts(kThirteen) == PairCounts::from_counts(0, 11, 11, 56));
    CHECK(pair_counts(ContingencyTable{{2, 0}, {0, 3}}) == PairCounts::from_counts(4, 0, 0, 6));
    CHECK(pair_counts(ContingencyTable{{0, 1}, {1, 1}}) == PairCounts::from_counts(0, 1, 1, 1));
    CHECK(pair_counts(kThirteen).n_pairs == 78);
    CHECK_THROWS_AS(PairCounts::from_counts(-1, 0, 0, 0), InputError);
}

TEST_CASE("rand_index") {
    CHECK(rand_index(pair_counts(kThirteen)) == ExactRatio(56, 78));
    // One cluster against all singletons.
    const ContingencyTable trivial{{1, 1, 1, 1, 1}};
    CHECK(rand_index(pair_counts(trivial)) == ExactRatio(0));
    CHECK(adjusted_rand_index(pair_counts(trivial)) == ExactRatio(0));
    CHECK(rand_index(pair_counts(ContingencyTable{{2, 0}, {0, 3}})) == ExactRatio(1));
    CHECK_THROWS_AS(rand_index(pair_counts(ContingencyTable{{1}})), UndefinedIndexError);
}

TEST_CASE("expected_rand_index") {
    CHECK(expected_rand_index(pair_counts(kThirteen)) == ExactRatio(4610, 6084));
    CHECK(expected_rand_index(pair_counts(ContingencyTable{{4}})) == ExactRatio(1));
    CHECK(expected_rand_index(pair_counts(ContingencyTable{{0, 1}, {1, 1}})) == ExactRatio(5, 9));
    CHECK_THROWS_AS(expected_rand_index(PairCounts::from_counts(0, 0, 0, 0)), UndefinedIndexError);
}

TEST_CASE("adjusted_rand_index") {
    CHECK(adjusted_rand_index(pair_counts(kThirteen)) == ExactRatio(-242, 1474));
    CHECK(adjusted_rand_index(pair_counts(ContingencyTable{{2, 0}, {0, 3}})) == ExactRatio(1));
    CHECK(adjusted_rand_index(pair_counts(ContingencyTable{{0, 1}, {1, 1}})) == ExactRatio(-1, 2));
    CHECK_THROWS_AS(adjusted_rand_index(pair_counts(ContingencyTable{{5}})), UndefinedIndexError);
    CHECK_THROWS_AS(adjusted_rand_index(pair_counts(ContingencyTable{{1}})), UndefinedIndexError);
    // Identical all-singleton partitions: the denominator vanishes too.
    CHECK_THROWS_AS(adjusted_rand_index(pair_counts(ContingencyTable{{1, 0}, {0, 1}})), UndefinedIndexError);
}

TEST_CASE("adjusted_rand_distance") {
    CHECK(adjusted_rand_distance(pair_counts(kThirteen)) == ExactRatio(1716, 1474));
    CHECK(adjusted_rand_distance(pair_counts(ContingencyTable{{3, 0}, {0, 2}})) == ExactRatio(0));
    for (Count s = 2; s <= 6; ++s) {
        const ContingencyTable row(1, s, std::vector<Count>(s, 1));
        CHECK(adjusted_rand_distance(pair_counts(row)) == ExactRatio(1));
    }
    CHECK_THROWS_AS(adjusted_rand_distance(pair_counts(ContingencyTable{{3}})), UndefinedIndexError);
}

TEST_CASE("zero pair-count predicates") {
    CHECK(is_a_zero(kThirteen));
    CHECK(is_d_zero(ContingencyTable{{1, 1, 1}}));
    CHECK_FALSE(is_a_zero(ContingencyTable{{2, 0}, {0, 2}}));
    CHECK_FALSE(is_d_zero(ContingencyTable{{2, 0}, {0, 2}}));
}

TEST_CASE("large tables do not overflow") {
    const Count half = 5'000'000;
    const ContingencyTable t{{half, 0}, {0, half}};
    const PairCounts p = pair_counts(t);
    CHECK(p.a == 2 * choose2(BigInt(half)));
    CHECK(p.d == BigInt(half) * half);
    CHECK(p.n_pairs * p.n_pairs > BigInt("18446744073709551615"));
    CHECK(adjusted_rand_index(p) == ExactRatio(1));

    const ContingencyTable mixed{{half, half}, {half, 1}};
    const PairCounts q = pair_counts(mixed);
    CHECK(adjusted_rand_index(q) + adjusted_rand_distance(q) == ExactRatio(1));
}

TEST_CASE("identities over random tables") {
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        const ContingencyTable t = testing::random_table(rng, 6, 40);
        const PairCounts p = pair_counts(t);
        REQUIRE(p.n_pairs == choose2(BigInt(t.total())));
        if (t.total() <= 25) CHECK(p == pairs_by_enumeration(t));
        CHECK(is_a_zero(t) == (p.a == 0));
        CHECK(is_d_zero(t) == (p.d == 0));

        const ExactRatio ard = [&] {
            try {
                return adjusted_rand_distance(p);
            } catch (const UndefinedIndexError&) {
                return ExactRatio(-1);
            }
        }();
        if (ard == ExactRatio(-1)) {
            CHECK_THROWS_AS(adjusted_rand_index(p), UndefinedIndexError);
            continue;
        }
        ++checked;
        const ExactRatio ari = adjusted_rand_index(p);
        CHECK(ari + ard == ExactRatio(1));
        CHECK(ari <= ExactRatio(1));
        CHECK(adjusted_rand_distance(PairCounts::from_counts(p.a, p.c, p.b, p.d)) == ard);
        CHECK(adjusted_rand_distance(PairCounts::from_counts(p.d, p.b, p.c, p.a)) == ard);
        const ExactRatio eri = expected_rand_index(p);
        if (eri != ExactRatio(1)) CHECK((rand_index(p) - eri) / (ExactRatio(1) - eri) == ari);

        CHECK(adjusted_rand_index(pair_counts(t.transposed())) == ari);
        std::vector<std::size_t> rows(t.rows()), cols(t.cols());
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        const PairCounts permuted = pair_counts(t.permuted(rows, cols));
        CHECK(rand_index(permuted) == rand_index(p));
        CHECK(adjusted_rand_index(permuted) == ari);
        CHECK(adjusted_rand_distance(permuted) == ard);
    }
    CHECK(checked > 1900);
}

TEST_CASE("identical partitions with a non-singleton cluster have ARI 1") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t r = 2 + rng() % 6;
        std::vector<Count> entries(r * r, 0);
        for (std::size_t i = 0; i < r; ++i) entries[i * r + i] = 1 + rng() % 5;
        entries[0] = std::max<Count>(entries[0], 2);
        const PairCounts p = pair_counts(ContingencyTable(r, r, entries));
        CHECK(p.b == 0);
        CHECK(p.c == 0);
        CHECK(adjusted_rand_index(p) == ExactRatio(1));
        CHECK(adjusted_rand_distance(p) == ExactRatio(0));
    }
}
