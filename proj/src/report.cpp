#include "minari/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "minari/errors.hpp"

namespace minari {

namespace {

std::string trim(const std::string& s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    auto begin = std::find_if(s.begin(), s.end(), not_space);
    auto end = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return begin < end ? std::string(begin, end) : std::string();
}

std::string strip_bom(std::string line, std::size_t line_no) {
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    return line;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

nlohmann::json ratio_json(const ExactRatio& x, const DisplayOptions& opts) {
    nlohmann::json j{{"exact", x.to_string()}};
    if (!opts.exact_only) j["decimal"] = x.to_significant(opts.precision);
    return j;
}

nlohmann::json pairs_json(const PairCounts& p) {
    return {{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}, {"d", p.d.str()}, {"N", p.n_pairs.str()}};
}

ExactRatio ratio_from_json(const nlohmann::json& j, const char* key) {
    return ExactRatio::parse(j.at(key).at("exact").get<std::string>());
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : InputError(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}

std::vector<std::string> read_label_lines(std::istream& in, const std::string& source) {
    std::vector<std::string> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string label = trim(strip_bom(line, line_no));
        if (label.empty())
            throw ParseError(source, line_no, "empty label");
        labels.push_back(std::move(label));
    }
    if (labels.empty())
        throw ParseError(source, 0, "no labels");
    return labels;
}

std::vector<KeyedLabel> read_label_csv(std::istream& in, const std::string& source) {
    std::vector<KeyedLabel> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_bom(line, line_no);
        if (trim(line).empty())
            throw ParseError(source, line_no, "empty line");
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(source, line_no, "expected 'id,label'");
        std::string id = trim(line.substr(0, comma));
        std::string label = trim(line.substr(comma + 1));
        if (line_no == 1 && lower(id) == "id" && lower(label) == "label") continue;
        if (label.find(',') != std::string::npos)
            throw ParseError(source, line_no, "expected exactly two columns");
        if (id.empty() || label.empty())
            throw ParseError(source, line_no, "empty id or label");
        rows.push_back({std::move(id), std::move(label)});
    }
    if (rows.empty())
        throw ParseError(source, 0, "no labels");
    return rows;
}

std::pair<Clustering, Clustering> join_by_id(const std::vector<KeyedLabel>& a, const std::vector<KeyedLabel>& b) {
    std::unordered_map<std::string, std::string> by_id;
    for (const auto& row : b)
        if (!by_id.emplace(row.id, row.label).second)
            throw InputError("duplicate id '" + row.id + "' in second file");
    if (a.size() != b.size())
        throw InputError("files carry different numbers of ids (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    std::unordered_set<std::string> seen;
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    for (const auto& row : a) {
        if (!seen.insert(row.id).second)
            throw InputError("duplicate id '" + row.id + "' in first file");
        auto it = by_id.find(row.id);
        if (it == by_id.end())
            throw InputError("id '" + row.id + "' missing from second file");
        xs.push_back(row.label);
        ys.push_back(it->second);
    }
    return {Clustering(std::move(xs)), Clustering(std::move(ys))};
}

ContingencyTable read_table(std::istream& in, const std::string& source) {
    std::vector<std::vector<Count>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_bom(line, line_no);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<Count> row;
        std::string token;
        while (tokens >> token) {
            if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError(source, line_no, "not a non-negative integer: '" + token + "'");
            try {
                std::size_t used = 0;
                row.push_back(std::stoull(token, &used));
            } catch (const std::out_of_range&) {
                throw ParseError(source, line_no, "entry out of range: '" + token + "'");
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(source, line_no,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError(source, 0, "no table rows");
    try {
        return ContingencyTable::from_rows(rows);
    } catch (const InputError& e) {
        throw ParseError(source, 0, e.what());
    }
}

std::string render(const ExactRatio& x, const DisplayOptions& opts) {
    if (opts.exact_only) return x.to_string();
    return x.to_string() + " (" + x.to_significant(opts.precision) + ")";
}

ComparisonReport compare_table(const ContingencyTable& table) {
    PairCounts p = pair_counts(table);
    const auto r = static_cast<std::int64_t>(table.rows());
    const auto s = static_cast<std::int64_t>(table.cols());
    ExactRatio ari = adjusted_rand_index(p);
    ExactRatio floor = min_ari(r, s);
    std::vector<std::string> warnings;
    if (std::min(r, s) == 1)
        warnings.emplace_back("one clustering has a single cluster; the ARI is 0 for every such comparison");
    if (ari < floor)
        warnings.emplace_back("ARI " + ari.to_string() + " is below the closed-form minimum " + floor.to_string() +
                              " for sizes (" + std::to_string(r) + "," + std::to_string(s) +
                              "); normalized ARD exceeds 1");
    ExactRatio ri = rand_index(p);
    ExactRatio eri = expected_rand_index(p);
    ExactRatio ard = adjusted_rand_distance(p);
    ExactRatio nard = normalized_ard(p, r, s);
    return ComparisonReport{static_cast<std::int64_t>(table.total()),
                            r,
                            s,
                            table,
                            std::move(p),
                            std::move(ri),
                            std::move(eri),
                            std::move(ari),
                            std::move(ard),
                            std::move(floor),
                            std::move(nard),
                            std::move(warnings)};
}

std::string to_text(const ComparisonReport& report, const DisplayOptions& opts) {
    std::ostringstream os;
    os << "n: " << report.n << '\n'
       << "r: " << report.r << '\n'
       << "s: " << report.s << '\n'
       << "table:\n";
    std::istringstream rows(to_string(report.table));
    for (std::string row; std::getline(rows, row);) os << "  " << row << '\n';
    const auto& p = report.pair_counts;
    os << "pair_counts: a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d << " N=" << p.n_pairs << '\n'
       << "ri: " << render(report.ri, opts) << '\n'
       << "expected_ri: " << render(report.expected_ri, opts) << '\n'
       << "ari: " << render(report.ari, opts) << '\n'
       << "ard: " << render(report.ard, opts) << '\n'
       << "min_ari: " << render(report.min_ari, opts) << '\n'
       << "normalized_ard: " << render(report.normalized_ard, opts) << '\n';
    return os.str();
}

nlohmann::json table_json(const ContingencyTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < table.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < table.cols(); ++j) row.push_back(table.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const ComparisonReport& report, const DisplayOptions& opts) {
    return {
        {"n", report.n},
        {"r", report.r},
        {"s", report.s},
        {"table", table_json(report.table)},
        {"pair_counts", pairs_json(report.pair_counts)},
        {"ri", ratio_json(report.ri, opts)},
        {"expected_ri", ratio_json(report.expected_ri, opts)},
        {"ari", ratio_json(report.ari, opts)},
        {"ard", ratio_json(report.ard, opts)},
        {"min_ari", ratio_json(report.min_ari, opts)},
        {"normalized_ard", ratio_json(report.normalized_ard, opts)},
        {"warnings", report.warnings},
    };
}

ComparisonReport comparison_from_json(const nlohmann::json& j) {
    const auto& pc = j.at("pair_counts");
    auto big = [&](const char* key) { return parse_decimal_integer(pc.at(key).get<std::string>()); };
    PairCounts p = PairCounts::from_counts(big("a"), big("b"), big("c"), big("d"));
    if (p.n_pairs != big("N"))
        throw InputError("pair counts do not sum to N");
    return ComparisonReport{j.at("n").get<std::int64_t>(),
                            j.at("r").get<std::int64_t>(),
                            j.at("s").get<std::int64_t>(),
                            ContingencyTable::from_rows(j.at("table").get<std::vector<std::vector<Count>>>()),
                            std::move(p),
                            ratio_from_json(j, "ri"),
                            ratio_from_json(j, "expected_ri"),
                            ratio_from_json(j, "ari"),
                            ratio_from_json(j, "ard"),
                            ratio_from_json(j, "min_ari"),
                            ratio_from_json(j, "normalized_ard"),
                            j.at("warnings").get<std::vector<std::string>>()};
}

std::string bound_text(std::int64_t r, std::int64_t s, const DisplayOptions& opts) {
    std::ostringstream os;
    os << "r: " << r << '\n' << "s: " << s << '\n' << "min_ari: " << render(min_ari(r, s), opts) << '\n';
    if (r >= 2 && s >= 2) os << "approx_min_ari: " << render(approx_min_ari(r, s), opts) << '\n';
    os << "witness_n: " << (std::min(r, s) >= 2 ? r + s - 1 : std::max(r, s)) << '\n';
    return os.str();
}

nlohmann::json bound_json(std::int64_t r, std::int64_t s, const DisplayOptions& opts) {
    nlohmann::json j{{"r", r},
                     {"s", s},
                     {"min_ari", ratio_json(min_ari(r, s), opts)},
                     {"witness_n", std::min(r, s) >= 2 ? r + s - 1 : std::max(r, s)}};
    j["approx_min_ari"] = (r >= 2 && s >= 2) ? ratio_json(approx_min_ari(r, s), opts) : nlohmann::json(nullptr);
    return j;
}

std::string extremal_text(const BoundReport& bound, const DisplayOptions& opts) {
    const auto& p = bound.witness_pair_counts;
    std::ostringstream os;
    os << "# extremal table r=" << bound.r << " s=" << bound.s << " n=" << bound.witness_n << '\n'
       << "# pair_counts: a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d << " N=" << p.n_pairs << '\n'
       << "# ari: " << render(adjusted_rand_index(p), opts) << '\n'
       << "# min_ari: " << render(bound.min_ari, opts) << '\n'
       << to_string(bound.witness);
    return os.str();
}

nlohmann::json extremal_json(const BoundReport& bound, const DisplayOptions& opts) {
    return {{"r", bound.r},
            {"s", bound.s},
            {"n", bound.witness_n},
            {"table", table_json(bound.witness)},
            {"pair_counts", pairs_json(bound.witness_pair_counts)},
            {"ari", ratio_json(adjusted_rand_index(bound.witness_pair_counts), opts)},
            {"min_ari", ratio_json(bound.min_ari, opts)}};
}

std::string verdict_text(const oracle::TheoremVerdict& v, const DisplayOptions& opts) {
    const auto& o = v.oracle;
    std::ostringstream os;
    os << (v.pass ? "PASS" : "FAIL") << " r=" << v.r << " s=" << v.s << (v.zero_one_only ? " zero-one" : " full")
       << " n in [" << o.n_lo << "," << o.n_hi << "]\n"
       << "scanned: " << o.tables_scanned << " tables (" << o.undefined_skipped << " with undefined ARI skipped)\n"
       << "oracle_min_ari: " << render(o.best_ari, opts) << '\n'
       << "closed_form_min_ari: " << render(v.closed_form, opts) << '\n'
       << "optimum_at_n:";
    for (auto n : o.n_at_optimum) os << ' ' << n;
    os << '\n'
       << "witnesses: " << o.best_tables.size() << " (" << v.witnesses_at_extremal_n << " at n=" << v.extremal_n
       << ")\n";
    if (!o.best_tables.empty()) {
        os << "first_witness:\n";
        std::istringstream rows(to_string(o.best_tables.front()));
        for (std::string row; std::getline(rows, row);) os << "  " << row << '\n';
    }
    return os.str();
}

nlohmann::json verdict_json(const oracle::TheoremVerdict& v, const DisplayOptions& opts) {
    const auto& o = v.oracle;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& t : o.best_tables) witnesses.push_back(table_json(t));
    return {{"verdict", v.pass ? "PASS" : "FAIL"},
            {"r", v.r},
            {"s", v.s},
            {"zero_one_only", v.zero_one_only},
            {"n_range", {o.n_lo, o.n_hi}},
            {"tables_scanned", o.tables_scanned},
            {"undefined_skipped", o.undefined_skipped},
            {"oracle_min_ari", ratio_json(o.best_ari, opts)},
            {"closed_form_min_ari", ratio_json(v.closed_form, opts)},
            {"n_at_optimum", o.n_at_optimum},
            {"extremal_n", v.extremal_n},
            {"witnesses_at_extremal_n", v.witnesses_at_extremal_n},
            {"witnesses", witnesses},
            {"diagnostics", v.diagnostics}};
}

}  // namespace minari
