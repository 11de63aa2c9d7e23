#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <string>

#include "wronsk/errors.hpp"
#include "wronsk/report.hpp"
#include "wronsk/suites.hpp"
#include "wronsk/wronskian.hpp"

namespace py = pybind11;

namespace {

using namespace wronsk;

ExpansionBudget make_budget(long max_degree, unsigned long max_sparsity) {
    ExpansionBudget budget;
    budget.max_degree = Integer(max_degree);
    budget.max_sparsity = max_sparsity;
    return budget;
}

std::string canonical(const std::string& text) {
    return serialize_instance(parse_instance(text));
}

std::string evaluate(const std::string& text, const std::string& point) {
    const SpsInstance inst = parse_instance(text);
    return to_string(evaluate_instance(inst, parse_rational(point)));
}

std::string report_json(const std::string& text, bool exact, bool isolate, bool pit,
                        long budget_degree, unsigned long budget_sparsity,
                        unsigned long basis_cap, unsigned long max_queries) {
    const SpsInstance inst = parse_instance(text);
    ReportOptions opts;
    opts.budget = make_budget(budget_degree, budget_sparsity);
    opts.exact = exact;
    opts.isolate = isolate;
    opts.run_pit = pit;
    opts.basis_cap = basis_cap;
    opts.max_queries = max_queries;
    return report_to_json(build_root_report(inst, opts)).dump();
}

std::string blackbox_json(const std::string& text, const std::string& model,
                          unsigned long max_queries) {
    const SpsInstance inst = parse_instance(text);
    if (model != "sparse" && model != "dense")
        throw std::invalid_argument("model must be 'sparse' or 'dense'");
    const PitModel pm = model == "sparse" ? PitModel::sparse : PitModel::dense;
    return verdict_to_json(pit_blackbox(inst, pm, max_queries)).dump();
}

std::string whitebox_json(const std::string& text, unsigned long basis_cap) {
    const SpsInstance inst = parse_instance(text);
    const PitVerdict verdict = pit_whitebox(inst, basis_cap);
    nlohmann::json j = verdict_to_json(verdict);
    j["certificate_check"] = certificate_check(inst, verdict);
    return j.dump();
}

std::string wronskian_json(const std::string& text, std::size_t prefix) {
    const SpsInstance inst = parse_instance(text);
    if (prefix == 0 || prefix > inst.num_terms())
        throw std::invalid_argument("prefix must be between 1 and the term count");
    const FactoredWronskian fw =
        factored_wronskian(inst.bases, inst.exponents, prefix);
    const std::vector<PowerProduct> rows(inst.exponents.begin(),
                                         inst.exponents.begin() + prefix);
    nlohmann::json j;
    j["prefix"] = Integer(prefix).get_str();
    j["shift"] = Integer(fw.shift).get_str();
    nlohmann::json exps = nlohmann::json::array();
    for (const Integer& e : fw.power_exponents) exps.push_back(e.get_str());
    j["power_exponents"] = exps;
    j["det_t"] = fw.det_t.to_string();
    j["leading_coefficient"] =
        to_string(wronskian_leading_coefficient(inst.bases, rows));
    return j.dump();
}

std::string generate(const std::string& kind, std::size_t k, std::size_t m,
                     unsigned long t, unsigned long d, unsigned long alpha_max,
                     unsigned long coeff_max, std::uint64_t seed, unsigned long p) {
    if (kind == "optimal") return serialize_instance(optimal_instance(k, p).instance);
    if (kind == "descartes")
        return serialize_instance(descartes_instance(k, alpha_max, seed));
    if (kind != "random" && kind != "zero")
        throw std::invalid_argument(
            "kind must be one of random, zero, optimal, descartes");
    InstanceParams params;
    params.k = k;
    params.m = m;
    params.t = t;
    params.d = d;
    params.alpha_max = alpha_max;
    params.coeff_max = coeff_max;
    params.seed = seed;
    params.force_zero = kind == "zero";
    return serialize_instance(random_instance(params));
}

std::string suite_json(const std::string& name) {
    const SuiteResult res = run_suite(name);
    nlohmann::json j;
    j["name"] = res.name;
    j["cases"] = res.cases;
    j["failures"] = res.failures;
    j["millis"] = res.millis;
    j["notes"] = res.notes;
    j["passed"] = res.passed();
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact root bounds, Wronskian factorizations, and identity "
                "tests for sums of products of powers of sparse polynomials. "
                "All functions take the instance text format; numeric results "
                "come back as decimal strings inside JSON.";

    py::register_exception<parse_error>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<budget_error>(mod, "BudgetError", PyExc_RuntimeError);

    mod.def("canonical", &canonical, py::arg("text"),
            "Parse an instance and return its canonical serialization.");
    mod.def("evaluate", &evaluate, py::arg("text"), py::arg("point"),
            "Evaluate an instance at a rational point given as 'p' or 'p/q'.");
    mod.def("report_json", &report_json, py::arg("text"), py::arg("exact") = true,
            py::arg("isolate") = false, py::arg("pit") = false,
            py::arg("budget_degree") = 10000, py::arg("budget_sparsity") = 100000,
            py::arg("basis_cap") = 5, py::arg("max_queries") = 1000000,
            "Full root report (bounds, exact count, intervals, verdicts) as JSON.");
    mod.def("pit_blackbox_json", &blackbox_json, py::arg("text"),
            py::arg("model") = "dense", py::arg("max_queries") = 1000000,
            "Query-point identity test verdict as JSON.");
    mod.def("pit_whitebox_json", &whitebox_json, py::arg("text"),
            py::arg("basis_cap") = 5,
            "Structural identity test verdict, with its certificate checked, as JSON.");
    mod.def("wronskian_json", &wronskian_json, py::arg("text"), py::arg("prefix"),
            "Factored Wronskian of the first `prefix` power products as JSON.");
    mod.def("generate", &generate, py::arg("kind") = "random", py::arg("k") = 2,
            py::arg("m") = 1, py::arg("t") = 2, py::arg("d") = 2,
            py::arg("alpha_max") = 2, py::arg("coeff_max") = 5, py::arg("seed") = 0,
            py::arg("p") = 1,
            "Produce instance text: random, zero (cancelling), optimal, or descartes.");
    mod.def("suite_json", &suite_json, py::arg("name"),
            "Run one named verification suite and return its result as JSON.");
    mod.def("suite_names", [] { return suite_names(); },
            "Names of the available verification suites.");
}
