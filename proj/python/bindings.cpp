// JSON-in, JSON-out bindings; the Python package decodes the strings.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "padic_henon/campaign.hpp"
#include "padic_henon/dynamics.hpp"
#include "padic_henon/errors.hpp"
#include "padic_henon/fibonacci.hpp"
#include "padic_henon/measure.hpp"
#include "padic_henon/regions.hpp"
#include "padic_henon/serialize.hpp"
#include "padic_henon/verifier.hpp"

namespace py = pybind11;
using namespace padic_henon;

namespace {

std::string orbit(const std::string& x, const std::string& y, const std::string& c, std::uint64_t p,
                  std::int64_t steps, std::optional<std::int64_t> escape, std::size_t bit_budget, bool fwd) {
    const Prime prime(p);
    const MapParams params(parse_rational(c, prime));
    OrbitOptions opts;
    opts.max_steps = steps;
    opts.escape_exponent = escape;
    opts.bit_budget = bit_budget;
    const Point start{parse_rational(x, prime), parse_rational(y, prime)};
    return to_json(fwd ? forward_orbit(start, params, opts) : backward_orbit(start, params, opts)).dump();
}

std::string classify_profile(std::optional<std::int64_t> a, std::optional<std::int64_t> b, std::int64_t d) {
    if (!b) throw std::invalid_argument("b must be finite");
    const NormProfile pr{a, *b};
    const Classifier& cls = classifier_for(d);
    json j = {{"profile", to_json(pr)}, {"d", d}, {"label", to_json(cls.classify(pr))}};
    if (auto r = cls.refine_j(pr)) j["refinement"] = to_json(*r);
    if (auto t = cls.t_index(pr)) j["t_index"] = *t;
    return j.dump();
}

std::string fixed(const std::string& c, std::uint64_t p, std::int64_t precision) {
    json out = json::array();
    for (const auto& fp : fixed_points(MapParams(parse_rational(c, Prime(p))), precision)) out.push_back(to_json(fp));
    return out.dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact backward dynamics of the p-adic Henon map f(x, y) = (xy + c, x)";

    py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_ArithmeticError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def("orbit_json", &orbit, py::arg("x"), py::arg("y"), py::arg("c"), py::arg("p"), py::arg("steps"),
          py::arg("escape_exponent"), py::arg("bit_budget"), py::arg("forward"));
    m.def("classify_json", &classify_profile, py::arg("a"), py::arg("b"), py::arg("d"));
    m.def("fixed_points_json", &fixed, py::arg("c"), py::arg("p"), py::arg("precision"));
    m.def(
        "tn_report_json",
        [](std::int64_t n, std::int64_t k, std::uint64_t p) { return tn_report(tn_table(n, k, Prime(p)), k, Prime(p)).dump(); },
        py::arg("n_max"), py::arg("k"), py::arg("p"));
    m.def(
        "verify_transition_json",
        [](const std::string& spec) { return to_json(verify_transition(lemma_spec_from_json(json::parse(spec)))).dump(); },
        py::arg("spec"));
    m.def(
        "run_campaign_json",
        [](const std::string& campaign) { return to_json(run_campaign(load_campaign(json::parse(campaign)))).dump(); },
        py::arg("campaign"));
    m.def(
        "fib", [](std::int64_t n) { return fib(n).get_str(); }, py::arg("n"));
    m.def("run_cli", &run_cli, py::arg("args"));
    m.attr("default_bit_budget") = kDefaultBitBudget;
}
