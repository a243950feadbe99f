#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bernstir/bell.hpp"
#include "bernstir/bernoulli.hpp"
#include "bernstir/series.hpp"
#include "bernstir/stirling.hpp"
#include "bernstir/verify.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace bernstir;

namespace {

// Exact values cross the boundary as Python int / fractions.Fraction.
py::object to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(r.numerator()), to_py(r.denominator()));
}

py::list to_py(const std::vector<Rational>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

// Accepts int, Fraction or a "p/q" string.
Rational from_py(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

BellArgs args_from_py(const py::iterable& xs) {
    std::vector<Rational> values;
    for (auto x : xs) values.push_back(from_py(x));
    return BellArgs(std::move(values));
}

MethodId method_from_py(const std::string& name) {
    if (auto m = parse_method(name)) return *m;
    throw py::value_error("unknown method '" + name + "'");
}

py::object json_to_py(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Bernoulli numbers, Stirling numbers of the second kind and partial Bell polynomials";

    m.def("factorial", [](int n) { return to_py(factorial(n)); }, py::arg("n"));
    m.def("binomial", [](int n, long k) { return to_py(binomial(n, k)); }, py::arg("n"), py::arg("k"));

    m.def("stirling", [](int n, int k) { return to_py(StirlingTable(n).at(n, k)); }, py::arg("n"), py::arg("k"),
          "S(n, k) read from the recurrence table");
    m.def("stirling_explicit", [](int n, int k) { return to_py(stirling_explicit(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def(
        "stirling_table",
        [](int max_n) {
            const StirlingTable table(max_n);
            py::list rows;
            for (int n = 0; n <= max_n; ++n) {
                py::list row;
                for (int k = 0; k <= n; ++k) row.append(to_py(table.at(n, k)));
                rows.append(row);
            }
            return rows;
        },
        py::arg("max_n"));

    m.def(
        "bell",
        [](int n, int k, const py::iterable& xs, const std::string& method) {
            const BellArgs args = args_from_py(xs);
            if (method == "partition") return to_py(bell_partition_sum(n, k, args));
            if (method == "recurrence") return to_py(bell_recurrence(n, k, args));
            if (method == "egf") return to_py(bell_egf_coeff(n, k, args));
            throw py::value_error("unknown bell method '" + method + "'");
        },
        py::arg("n"), py::arg("k"), py::arg("args"), py::arg("method") = "recurrence",
        "B_{n,k}(x_1, ..., x_{n-k+1}); method is partition, recurrence or egf");
    m.def("bell_zero_one", [](int n, int k) { return to_py(bell_zero_one(n, k, StirlingTable(n))); },
          py::arg("n"), py::arg("k"));
    m.def("bell_reciprocal_args",
          [](int n, int k) { return to_py(bell_reciprocal_args(n, k, StirlingTable(n + k))); }, py::arg("n"),
          py::arg("k"));
    m.def(
        "bell_scaling_identity",
        [](int n, int k, const py::iterable& from_x2) {
            const BellArgs tail = args_from_py(from_x2);
            const auto sides = bell_scaling_identity(n, k, tail.values());
            return py::make_tuple(to_py(sides.lhs), to_py(sides.rhs));
        },
        py::arg("n"), py::arg("k"), py::arg("x_from_2"));

    m.def("bernoulli_series", [](int max_n) { return to_py(bernoulli_series(max_n)); }, py::arg("max_n"));
    m.def("stirling_egf_coeff", [](int n, int k) { return to_py(stirling_egf_coeff(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def(
        "bell_egf_coeff", [](int n, int k, const py::iterable& xs) { return to_py(bell_egf_coeff(n, k, args_from_py(xs))); },
        py::arg("n"), py::arg("k"), py::arg("args"));

    m.def(
        "methods",
        [] {
            std::vector<std::string> names;
            for (MethodId id : kAllMethods) names.emplace_back(method_name(id));
            return names;
        });
    m.def("supports", [](const std::string& method, int n) { return supports(method_from_py(method), n); },
          py::arg("method"), py::arg("n"));
    m.def("bernoulli", [](int n, const std::string& method) { return to_py(bernoulli(n, method_from_py(method))); },
          py::arg("n"), py::arg("method") = "theorem",
          "B_n by the named method; ValueError if the method is undefined at n");
    m.def("power_sum_coeffs", [](int p) { return to_py(power_sum_coeffs(p).coeffs); }, py::arg("p"));

    m.def(
        "cross_verify",
        [](int max_n, const std::vector<std::string>& known, unsigned threads) {
            MethodSet set;
            for (const auto& name : known) set.insert(method_from_py(name));
            return json_to_py(to_json(cross_verify(max_n, set, threads)));
        },
        py::arg("max_n"), py::arg("known") = std::vector<std::string>{}, py::arg("threads") = 1u,
        "Cross-verification report as a dict (same schema as `verify --format json`)");
    m.def(
        "identity_suite",
        [](int max_n, int trials, std::uint64_t seed) { return json_to_py(to_json(identity_suite(max_n, trials, seed))); },
        py::arg("max_n"), py::arg("trials"), py::arg("seed"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
