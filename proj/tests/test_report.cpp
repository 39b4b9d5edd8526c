#include <doctest.h>

#include <sstream>

#include "minari/errors.hpp"
#include "minari/report.hpp"

using namespace minari;

namespace {

const char* kThirteenFile =
    "# 13 objects, 5 x 5\n"
    "1 0 1 1 0\n"
    "0 1 0 0 1\n"
    "\n"
    "1 0 1 0 1   # row three\n"
    "0 1 0 1 0\n"
    "1 0 1 0 1\n";

ContingencyTable table_from(const std::string& text) {
    std::istringstream in(text);
    return read_table(in, "table.txt");
}

template <class Fn>
std::size_t parse_error_line(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("expected ParseError");
    return 0;
}

}  // namespace

TEST_CASE("read_table") {
    const ContingencyTable t = table_from(kThirteenFile);
    CHECK(t.rows() == 5);
    CHECK(t.total() == 13);
    CHECK(t.at(2, 4) == 1);
    CHECK(table_from("\xEF\xBB\xBF" "1 2\n3 4") == ContingencyTable{{1, 2}, {3, 4}});

    CHECK(parse_error_line([] { table_from("1 0\n0 1\n1 x\n"); }) == 3);
    CHECK(parse_error_line([] { table_from("1 0\n\n0 1 1\n"); }) == 3);
    CHECK(parse_error_line([] { table_from("1 -1\n"); }) == 1);
    CHECK(parse_error_line([] { table_from("99999999999999999999999\n"); }) == 1);
    CHECK_THROWS_AS(table_from("# nothing\n"), ParseError);
    CHECK_THROWS_AS(table_from("1 0\n0 0\n"), ParseError);
}

TEST_CASE("read_label_lines") {
    std::istringstream in("  a\nb \n\ta\n");
    CHECK(read_label_lines(in, "x") == std::vector<std::string>{"a", "b", "a"});
    std::istringstream gap("a\n\nb\n");
    CHECK(parse_error_line([&] { read_label_lines(gap, "x"); }) == 2);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_label_lines(empty, "x"), ParseError);
}

TEST_CASE("csv labels joined by id") {
    std::istringstream a("id,label\n1,x\n2,x\n3,y\n");
    std::istringstream b("3, q\n1, p\n2, q\n");
    const auto ka = read_label_csv(a, "a.csv");
    const auto kb = read_label_csv(b, "b.csv");
    CHECK(ka.size() == 3);
    auto [x, y] = join_by_id(ka, kb);
    CHECK(x.labels() == std::vector<std::string>{"x", "x", "y"});
    CHECK(y.labels() == std::vector<std::string>{"p", "q", "q"});
    CHECK(contingency_from_labels(x, y) == ContingencyTable{{1, 1}, {0, 1}});

    std::istringstream bad("1,x\n2\n");
    CHECK(parse_error_line([&] { read_label_csv(bad, "bad.csv"); }) == 2);
    std::istringstream three("1,x,z\n");
    CHECK(parse_error_line([&] { read_label_csv(three, "bad.csv"); }) == 1);

    const std::vector<KeyedLabel> left{{"1", "x"}, {"2", "y"}};
    CHECK_THROWS_AS(join_by_id(left, {{"1", "x"}, {"3", "y"}}), InputError);
    CHECK_THROWS_AS(join_by_id(left, {{"1", "x"}, {"1", "y"}}), InputError);
    CHECK_THROWS_AS(join_by_id(left, {{"1", "x"}}), InputError);
    CHECK_THROWS_AS(join_by_id({{"1", "x"}, {"1", "y"}}, {{"1", "x"}, {"2", "y"}}), InputError);
}

TEST_CASE("comparison report for the 13-object example") {
    const ComparisonReport report = compare_table(table_from(kThirteenFile));
    CHECK(report.n == 13);
    CHECK(report.pair_counts == PairCounts::from_counts(0, 11, 11, 56));
    CHECK(report.ari == ExactRatio(-242, 1474));
    CHECK(report.ard == ExactRatio(1716, 1474));
    CHECK(report.min_ari == ExactRatio(-5, 13));
    CHECK(report.normalized_ard == ExactRatio(1716, 1474) / ExactRatio(18, 13));
    CHECK(report.warnings.empty());

    const std::string text = to_text(report, {});
    CHECK(text.find("ari: -11/67 (-0.164179)") != std::string::npos);
    CHECK(text.find("min_ari: -5/13 (-0.384615)") != std::string::npos);
    CHECK(text.find("pair_counts: a=0 b=11 c=11 d=56 N=78") != std::string::npos);

    const nlohmann::json j = to_json(report, {});
    CHECK(j["ari"]["exact"] == "-11/67");
    CHECK(j["ari"]["decimal"] == "-0.164179");
    CHECK(j["pair_counts"]["N"] == "78");
    const nlohmann::json exact = to_json(report, {.exact_only = true});
    CHECK_FALSE(exact["ari"].contains("decimal"));

    const ComparisonReport back = comparison_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.table == report.table);
    CHECK(back.pair_counts == report.pair_counts);
    CHECK(back.ri == report.ri);
    CHECK(back.expected_ri == report.expected_ri);
    CHECK(back.ari == report.ari);
    CHECK(back.ard == report.ard);
    CHECK(back.min_ari == report.min_ari);
    CHECK(back.normalized_ard == report.normalized_ard);
}

TEST_CASE("comparison warnings and errors") {
    const ComparisonReport row = compare_table(ContingencyTable{{1, 2, 1}});
    CHECK(row.ari == ExactRatio(0));
    CHECK(row.warnings.size() == 1);

    const ComparisonReport below = compare_table(ContingencyTable{{1, 1, 1}, {1, 1, 0}});
    CHECK(below.ari == ExactRatio(-4, 11));
    CHECK(below.normalized_ard > ExactRatio(1));
    CHECK(below.warnings.size() == 1);

    CHECK_THROWS_AS(compare_table(ContingencyTable{{7}}), UndefinedIndexError);
    CHECK_THROWS_AS(compare_table(ContingencyTable{{1, 0}, {0, 1}}), UndefinedIndexError);
}

TEST_CASE("bound and extremal renderings") {
    CHECK(bound_text(5, 5, {}).find("min_ari: -5/13 (-0.384615)") != std::string::npos);
    CHECK(bound_text(5, 5, {}).find("witness_n: 9") != std::string::npos);
    CHECK(bound_text(2, 2, {.exact_only = true}).find("min_ari: -1/2\n") != std::string::npos);
    CHECK(bound_text(1, 7, {.exact_only = true}).find("min_ari: 0\n") != std::string::npos);
    CHECK(bound_text(1, 7, {}).find("approx") == std::string::npos);
    CHECK(bound_json(1, 7, {})["approx_min_ari"].is_null());

    for (std::int64_t r = 1; r <= 6; ++r)
        for (std::int64_t s = 2; s <= 6; ++s) {
            const BoundReport b = extremal_table(r, s);
            CHECK(table_from(extremal_text(b, {})) == b.witness);
        }
    const nlohmann::json j = extremal_json(extremal_table(2, 2), {});
    CHECK(j["table"] == nlohmann::json::parse("[[1,1],[1,0]]"));
    CHECK(j["ari"]["exact"] == "-1/2");
}

TEST_CASE("verdict rendering") {
    const auto v = oracle::verify_theorem(2, 2, 6);
    const std::string text = verdict_text(v, {.exact_only = true});
    CHECK(text.rfind("PASS r=2 s=2 full n in [2,6]", 0) == 0);
    CHECK(text.find("oracle_min_ari: -1/2") != std::string::npos);
    CHECK(text.find("optimum_at_n: 3 4") != std::string::npos);
    const nlohmann::json j = verdict_json(v, {});
    CHECK(j["verdict"] == "PASS");
    CHECK(j["tables_scanned"] == 125);
    CHECK(j["witnesses"].size() == 5);
}
