// minari: exact pair-counting comparison of clusterings and minimum-ARI bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minari/bounds.hpp"
#include "minari/errors.hpp"
#include "minari/oracle.hpp"
#include "minari/report.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kMalformed = 2,
    kUndefined = 3,
    kVerifyFailed = 4,
    kBudget = 5,
};

struct OutputOptions {
    std::string format = "text";
    minari::DisplayOptions display;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--precision", out.display.precision, "Significant digits of decimal renderings")
        ->check(CLI::Range(1, 100));
    cmd->add_flag("--exact", out.display.exact_only, "Print exact fractions only");
}

template <class Fn>
auto with_input(const std::string& path, Fn&& fn) {
    if (path == "-") return fn(std::cin, std::string("<stdin>"));
    std::ifstream in(path);
    if (!in) throw minari::InputError("cannot open '" + path + "'");
    return fn(in, path);
}

minari::ContingencyTable load_comparison(const std::string& table_path, const std::string& labels_a,
                                         const std::string& labels_b, bool csv) {
    using namespace minari;
    if (!table_path.empty())
        return with_input(table_path, [](std::istream& in, const std::string& name) { return read_table(in, name); });
    if (labels_a.empty() || labels_b.empty())
        throw InputError("compare needs --table, or both --labels-a and --labels-b");
    if (labels_a == "-" && labels_b == "-")
        throw InputError("only one input may be read from stdin");
    if (csv) {
        auto read = [](std::istream& in, const std::string& name) { return read_label_csv(in, name); };
        auto [x, y] = join_by_id(with_input(labels_a, read), with_input(labels_b, read));
        return contingency_from_labels(x, y);
    }
    auto read = [](std::istream& in, const std::string& name) { return read_label_lines(in, name); };
    return contingency_from_labels(Clustering(with_input(labels_a, read)), Clustering(with_input(labels_b, read)));
}

void emit(const OutputOptions& out, const std::string& text, const nlohmann::json& json) {
    if (out.format == "json")
        std::cout << json.dump(2) << '\n';
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Rand / adjusted Rand comparison of clusterings and minimum-ARI bounds"};
    app.require_subcommand(1);

    OutputOptions out;

    std::string table_path;
    std::string labels_a;
    std::string labels_b;
    bool csv = false;
    auto* compare = app.add_subcommand("compare", "Compare two clusterings");
    compare->add_option("--table", table_path, "Contingency table file ('-' for stdin)");
    compare->add_option("--labels-a", labels_a, "Labels of the first clustering, one per line");
    compare->add_option("--labels-b", labels_b, "Labels of the second clustering, one per line");
    compare->add_flag("--csv", csv, "Label files are 'id,label' CSV, joined by id");
    add_output_options(compare, out);

    std::int64_t r = 0;
    std::int64_t s = 0;
    auto* bound = app.add_subcommand("bound", "Minimum ARI for clusterings of sizes r and s");
    bound->add_option("r", r)->required();
    bound->add_option("s", s)->required();
    add_output_options(bound, out);

    auto* extremal = app.add_subcommand("extremal", "Contingency table attaining the minimum ARI");
    extremal->add_option("r", r)->required();
    extremal->add_option("s", s)->required();
    add_output_options(extremal, out);

    std::optional<std::int64_t> n_max;
    bool zero_one = false;
    minari::oracle::OracleOptions oracle_opts;
    auto* verify = app.add_subcommand("verify", "Check the minimum ARI against exhaustive enumeration");
    verify->add_option("r", r)->required();
    verify->add_option("s", s)->required();
    verify->add_option("--n-max", n_max, "Largest object count swept (default r+s+3, or r*s with --zero-one)");
    verify->add_flag("--zero-one", zero_one, "Only tables with entries in {0,1}");
    verify->add_option("--budget", oracle_opts.budget, "Maximum number of tables to scan");
    verify->add_option("--threads", oracle_opts.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_output_options(verify, out);

    std::string ari_text;
    auto* normalize = app.add_subcommand("normalize", "Normalize a reported ARI by the minimum for (r, s)");
    normalize->add_option("ari", ari_text, "ARI as a decimal or fraction (read exactly)")->required();
    normalize->add_option("r", r)->required();
    normalize->add_option("s", s)->required();
    add_output_options(normalize, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    using namespace minari;
    try {
        if (*compare) {
            const ComparisonReport report = compare_table(load_comparison(table_path, labels_a, labels_b, csv));
            for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
            emit(out, to_text(report, out.display), to_json(report, out.display));
        } else if (*bound) {
            emit(out, bound_text(r, s, out.display), bound_json(r, s, out.display));
        } else if (*extremal) {
            const BoundReport report = extremal_table(r, s);
            emit(out, extremal_text(report, out.display), extremal_json(report, out.display));
        } else if (*verify) {
            const std::int64_t sweep = n_max.value_or(zero_one ? r * s : r + s + 3);
            const auto verdict = oracle::verify_theorem(r, s, sweep, zero_one, oracle_opts);
            for (const auto& d : verdict.diagnostics) std::cerr << d << '\n';
            emit(out, verdict_text(verdict, out.display), verdict_json(verdict, out.display));
            return verdict.pass ? kOk : kVerifyFailed;
        } else if (*normalize) {
            const ExactRatio ari = ExactRatio::parse(ari_text);
            const NormalizedArd result = normalized_ard_from_ari(ari, r, s);
            nlohmann::json warnings = nlohmann::json::array();
            if (result.below_minimum) {
                const std::string w = "ARI " + ari.to_string() + " is below the minimum " +
                                      min_ari(r, s).to_string() + " for sizes (" + std::to_string(r) + "," +
                                      std::to_string(s) + ")";
                std::cerr << "warning: " << w << '\n';
                warnings.push_back(w);
            }
            nlohmann::json j{{"ari", ari.to_string()}, {"r", r}, {"s", s},
                             {"min_ari", {{"exact", min_ari(r, s).to_string()}}},
                             {"normalized_ard", {{"exact", result.value.to_string()}}},
                             {"below_minimum", result.below_minimum}, {"warnings", warnings}};
            if (!out.display.exact_only) {
                j["min_ari"]["decimal"] = min_ari(r, s).to_significant(out.display.precision);
                j["normalized_ard"]["decimal"] = result.value.to_significant(out.display.precision);
            }
            emit(out, "normalized_ard: " + render(result.value, out.display) + '\n', j);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const UndefinedIndexError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUndefined;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}
