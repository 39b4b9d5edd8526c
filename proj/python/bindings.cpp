#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minari/bounds.hpp"
#include "minari/errors.hpp"
#include "minari/oracle.hpp"
#include "minari/partition.hpp"
#include "minari/report.hpp"

namespace py = pybind11;
using namespace minari;

namespace {

py::int_ to_py(const BigInt& x) {
    const std::string digits = x.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py(const ExactRatio& x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(x.numerator()), to_py(x.denominator()));
}

// int, Fraction, Decimal, or strings such as "0.81" and "-5/13".
ExactRatio ratio_arg(const py::handle& value) {
    return ExactRatio::parse(py::str(value).cast<std::string>());
}

std::vector<std::string> label_arg(const py::iterable& labels) {
    std::vector<std::string> out;
    for (auto item : labels) out.push_back(py::str(item).cast<std::string>());
    return out;
}

ContingencyTable table_arg(const std::vector<std::vector<Count>>& rows) {
    return ContingencyTable::from_rows(rows);
}

std::vector<std::vector<Count>> table_rows(const ContingencyTable& t) {
    std::vector<std::vector<Count>> rows(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) rows[i].assign(t.entries().begin() + i * t.cols(),
                                                               t.entries().begin() + (i + 1) * t.cols());
    return rows;
}

py::dict counts_dict(const PairCounts& p) {
    py::dict d;
    d["a"] = to_py(p.a);
    d["b"] = to_py(p.b);
    d["c"] = to_py(p.c);
    d["d"] = to_py(p.d);
    d["N"] = to_py(p.n_pairs);
    return d;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_minari, m) {
    m.doc() = "Exact Rand / adjusted Rand indices and minimum-ARI bounds";

    static py::exception<UndefinedIndexError> undefined(m, "UndefinedIndexError", PyExc_ArithmeticError);
    static py::exception<ResourceError> resource(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UndefinedIndexError& e) {
            undefined(e.what());
        } catch (const ResourceError& e) {
            resource(e.what());
        } catch (const InputError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("contingency_from_labels",
          [](const py::iterable& x, const py::iterable& y) {
              return table_rows(contingency_from_labels(Clustering(label_arg(x)), Clustering(label_arg(y))));
          },
          py::arg("labels_a"), py::arg("labels_b"));
    m.def("pair_counts", [](const std::vector<std::vector<Count>>& t) { return counts_dict(pair_counts(table_arg(t))); },
          py::arg("table"));
    m.def("rand_index", [](const std::vector<std::vector<Count>>& t) { return to_py(rand_index(pair_counts(table_arg(t)))); },
          py::arg("table"));
    m.def("expected_rand_index",
          [](const std::vector<std::vector<Count>>& t) { return to_py(expected_rand_index(pair_counts(table_arg(t)))); },
          py::arg("table"));
    m.def("adjusted_rand_index",
          [](const std::vector<std::vector<Count>>& t) { return to_py(adjusted_rand_index(pair_counts(table_arg(t)))); },
          py::arg("table"));
    m.def("adjusted_rand_distance",
          [](const std::vector<std::vector<Count>>& t) { return to_py(adjusted_rand_distance(pair_counts(table_arg(t)))); },
          py::arg("table"));

    m.def("min_ari", [](std::int64_t r, std::int64_t s) { return to_py(min_ari(r, s)); }, py::arg("r"), py::arg("s"));
    m.def("min_ari_equal_sizes", [](std::int64_t r) { return to_py(min_ari_equal_sizes(r)); }, py::arg("r"));
    m.def("approx_min_ari", [](std::int64_t r, std::int64_t s) { return to_py(approx_min_ari(r, s)); }, py::arg("r"),
          py::arg("s"));
    m.def("extremal_table",
          [](std::int64_t r, std::int64_t s) {
              const BoundReport b = extremal_table(r, s);
              py::dict d;
              d["r"] = b.r;
              d["s"] = b.s;
              d["min_ari"] = to_py(b.min_ari);
              d["witness_n"] = b.witness_n;
              d["table"] = table_rows(b.witness);
              d["pair_counts"] = counts_dict(b.witness_pair_counts);
              return d;
          },
          py::arg("r"), py::arg("s"));
    m.def("normalized_ard", [](const std::vector<std::vector<Count>>& t) { return to_py(normalized_ard(table_arg(t))); },
          py::arg("table"));
    m.def("normalized_ard_from_ari",
          [](const py::object& ari, std::int64_t r, std::int64_t s) {
              const NormalizedArd out = normalized_ard_from_ari(ratio_arg(ari), r, s);
              return py::make_tuple(to_py(out.value), out.below_minimum);
          },
          py::arg("ari"), py::arg("r"), py::arg("s"),
          "Returns (normalized ARD, below_minimum flag).");
    m.def("max_sum_squares",
          [](const py::iterable& floors, const py::object& total) {
              LemmaInstance inst;
              for (auto f : floors) inst.floors.push_back(ratio_arg(f));
              inst.total = ratio_arg(total);
              const SumSquaresMax out = max_sum_squares(inst);
              py::list xs;
              for (const auto& x : out.maximizer) xs.append(to_py(x));
              return py::make_tuple(xs, to_py(out.value));
          },
          py::arg("floors"), py::arg("total"));

    m.def("compare",
          [](const std::vector<std::vector<Count>>& t) {
              return json_to_py(to_json(compare_table(table_arg(t)), DisplayOptions{}));
          },
          py::arg("table"), "Full comparison report as a dict (same schema as the CLI's JSON output).");

    m.def("brute_force_min_ari",
          [](std::int64_t r, std::int64_t s, std::int64_t n_max, bool zero_one, std::uint64_t budget, unsigned threads) {
              oracle::OracleResult res;
              {
                  py::gil_scoped_release release;
                  res = oracle::brute_force_min_ari({r, s, n_max, zero_one}, {budget, threads});
              }
              py::dict d;
              d["best_ari"] = to_py(res.best_ari);
              py::list tables;
              for (const auto& t : res.best_tables) tables.append(table_rows(t));
              d["best_tables"] = tables;
              d["tables_scanned"] = res.tables_scanned;
              d["undefined_skipped"] = res.undefined_skipped;
              d["n_at_optimum"] = res.n_at_optimum;
              return d;
          },
          py::arg("r"), py::arg("s"), py::arg("n_max"), py::arg("zero_one") = false,
          py::arg("budget") = oracle::OracleOptions{}.budget, py::arg("threads") = 1u);
    m.def("verify_theorem",
          [](std::int64_t r, std::int64_t s, std::int64_t n_max, bool zero_one, std::uint64_t budget, unsigned threads) {
              oracle::TheoremVerdict v;
              {
                  py::gil_scoped_release release;
                  v = oracle::verify_theorem(r, s, n_max, zero_one, {budget, threads});
              }
              return json_to_py(verdict_json(v, DisplayOptions{}));
          },
          py::arg("r"), py::arg("s"), py::arg("n_max"), py::arg("zero_one") = false,
          py::arg("budget") = oracle::OracleOptions{}.budget, py::arg("threads") = 1u);
    m.def("verify_lemma1",
          [](std::int64_t p, std::int64_t t, std::int64_t floor_value) {
              const auto v = oracle::verify_lemma1(p, t, floor_value);
              py::dict d;
              d["pass"] = v.pass;
              d["max_found"] = to_py(v.max_found);
              d["closed_form"] = to_py(v.closed_form);
              d["argmax"] = v.argmax;
              d["points_scanned"] = v.points_scanned;
              return d;
          },
          py::arg("p"), py::arg("total"), py::arg("floor_value"));
}
