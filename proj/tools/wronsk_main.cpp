#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wronsk/bounds.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/instance.hpp"
#include "wronsk/pit.hpp"
#include "wronsk/real_roots.hpp"
#include "wronsk/report.hpp"
#include "wronsk/suites.hpp"
#include "wronsk/wronskian.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitSoundness = 4;

using nlohmann::json;
using namespace wronsk;

struct CommonFlags {
    bool as_json = false;
    unsigned long budget_degree = 10000;
    std::size_t budget_sparsity = 100000;
    std::size_t basis_cap = 5;
    unsigned long max_queries = 1000000;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.as_json, "emit a JSON report");
    cmd->add_option("--budget-degree", flags.budget_degree,
                    "largest degree the expansion oracle may reach");
    cmd->add_option("--budget-sparsity", flags.budget_sparsity,
                    "largest term count the expansion oracle may reach");
    cmd->add_option("--basis-cap", flags.basis_cap,
                    "largest whitebox basis before aborting");
    cmd->add_option("--max-queries", flags.max_queries,
                    "largest blackbox evaluation count before aborting");
}

ExpansionBudget budget_of(const CommonFlags& flags) {
    ExpansionBudget budget;
    budget.max_degree = Integer(flags.budget_degree);
    budget.max_sparsity = flags.budget_sparsity;
    return budget;
}

SpsInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'", 1, 1);
    std::ostringstream text;
    text << in.rdbuf();
    SpsInstance inst = parse_instance(text.str());
    inst.validate();
    return inst;
}

long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_bound(const std::string& file, const std::string& method, bool exact,
              const CommonFlags& flags) {
    const SpsInstance inst = load_instance(file);
    const auto start = std::chrono::steady_clock::now();

    json j;
    j["instance"] = serialize_instance(inst);
    j["method"] = method;
    std::ostringstream text;
    std::vector<Integer> bounds;

    const bool all = method == "all";
    if (all || method == "sparse") {
        const Integer b = bound_sparse(inst.num_terms(), inst.num_bases(),
                                       inst.max_base_sparsity());
        j["sparse"] = b.get_str();
        text << "sparse-model bound: " << b.get_str() << "\n";
        bounds.push_back(b);
    }
    if (all || method == "dense") {
        const Integer b =
            bound_dense(inst.num_terms(), inst.num_bases(), inst.max_base_degree());
        j["dense"] = b.get_str();
        text << "dense-model bound: " << b.get_str() << "\n";
        bounds.push_back(b);
    }
    if (all || method == "upsilon") {
        const CertifiedUpsilon up = certified_bound_upsilon(inst);
        j["upsilon"] = up.bound.get_str();
        j["upsilon_size"] = Integer(up.upsilon.size).get_str();
        j["reduced_k"] = Integer(up.reduced_k).get_str();
        text << "certified bound (1 + points) * k - 1: " << up.bound.get_str() << " with "
             << up.upsilon.size << " distinguished points, family reduced to "
             << up.reduced_k << "\n";
        bounds.push_back(up.bound);
    }
    if (all || method == "main3") {
        const CertifiedMain3 m3 = certified_bound_main3(inst, budget_of(flags));
        j["main3"] = m3.bound.get_str();
        json zs = json::array();
        for (unsigned long z : m3.prefix_root_counts) zs.push_back(Integer(z).get_str());
        j["prefix_root_counts"] = zs;
        text << "certified bound from prefix Wronskian roots: " << m3.bound.get_str()
             << "\n";
        bounds.push_back(m3.bound);
    }

    int code = kExitOk;
    if (exact) {
        const SparsePoly expanded = expand(inst, budget_of(flags));
        if (expanded.is_zero()) {
            j["exact_count"] = nullptr;
            text << "exact count: not applicable (instance is identically zero)\n";
        } else {
            const Integer count(count_real_roots(expanded));
            j["exact_count"] = count.get_str();
            text << "exact distinct real roots: " << count.get_str() << "\n";
            for (const Integer& b : bounds) {
                if (count > b) {
                    j["sound"] = false;
                    text << "SOUNDNESS VIOLATION: exact count " << count.get_str()
                         << " exceeds bound " << b.get_str() << "\n";
                    code = kExitSoundness;
                }
            }
            if (code == kExitOk) j["sound"] = true;
        }
    }
    j["millis"] = Integer(elapsed_ms(start)).get_str();
    emit(j, flags.as_json, text.str());
    return code;
}

int run_pit(const std::string& file, const std::string& mode, const std::string& model,
            const CommonFlags& flags) {
    const SpsInstance inst = load_instance(file);
    const auto start = std::chrono::steady_clock::now();

    json j;
    j["instance"] = serialize_instance(inst);
    j["mode"] = mode;
    std::ostringstream text;
    int code = kExitOk;

    if (mode == "blackbox") {
        const PitModel pm = model == "sparse" ? PitModel::sparse : PitModel::dense;
        j["model"] = model;
        const PitVerdict v = pit_blackbox(inst, pm, flags.max_queries);
        j["verdict"] = verdict_to_json(v);
        text << "blackbox verdict: " << (v.is_zero ? "zero" : "nonzero") << "\n";
        if (v.witness) text << "witness: " << v.witness->get_str() << "\n";
        text << "queries: " << v.query_count << " (bound " << v.bound_used.get_str()
             << ", so at most " << Integer(v.bound_used + 1).get_str() << ")\n";
    } else {
        const PitVerdict v = pit_whitebox(inst, flags.basis_cap);
        j["verdict"] = verdict_to_json(v);
        const bool ok = certificate_check(inst, v);
        j["certificate_check"] = ok;
        text << "whitebox verdict: " << (v.is_zero ? "zero" : "nonzero") << "\n";
        text << "basis size: " << v.basis.size() << ", dependencies: "
             << v.certificate.size() << ", independence tests: " << v.query_count << "\n";
        text << "certificate check: " << (ok ? "passed" : "FAILED") << "\n";
        if (!ok) code = kExitSoundness;
    }
    j["millis"] = Integer(elapsed_ms(start)).get_str();
    emit(j, flags.as_json, text.str());
    return code;
}

int run_roots(const std::string& file, bool with_pit, const CommonFlags& flags) {
    const SpsInstance inst = load_instance(file);
    const auto start = std::chrono::steady_clock::now();

    ReportOptions opts;
    opts.budget = budget_of(flags);
    opts.exact = true;
    opts.isolate = true;
    opts.run_pit = with_pit;
    opts.basis_cap = flags.basis_cap;
    opts.max_queries = flags.max_queries;

    const RootReport report = build_root_report(inst, opts);
    json j = report_to_json(report);
    j["millis"] = Integer(elapsed_ms(start)).get_str();
    emit(j, flags.as_json, render_report_text(report));
    return report.sound() ? kExitOk : kExitSoundness;
}

int run_wronskian(const std::string& file, std::size_t prefix, const CommonFlags& flags) {
    const SpsInstance inst = load_instance(file);
    if (prefix == 0 || prefix > inst.num_terms())
        throw parse_error("prefix must be between 1 and the term count", 1, 1);
    const auto start = std::chrono::steady_clock::now();

    const FactoredWronskian fw = factored_wronskian(inst.bases, inst.exponents, prefix);
    std::vector<PowerProduct> rows(inst.exponents.begin(),
                                   inst.exponents.begin() + prefix);
    const Rational lead = wronskian_leading_coefficient(inst.bases, rows);

    json j;
    j["instance"] = serialize_instance(inst);
    j["prefix"] = Integer(prefix).get_str();
    j["shift"] = Integer(fw.shift).get_str();
    json exps = json::array();
    for (const Integer& e : fw.power_exponents) exps.push_back(e.get_str());
    j["power_exponents"] = exps;
    j["det_t"] = fw.det_t.to_string();
    j["leading_coefficient"] = to_string(lead);

    std::ostringstream text;
    text << "Wronskian of the first " << prefix << " power products (shift "
         << fw.shift << "):\n";
    for (std::size_t b = 0; b < inst.num_bases(); ++b)
        text << "  base f" << (b + 1) << " exponent: "
             << fw.power_exponents[b].get_str() << "\n";
    text << "  matrix determinant: " << fw.det_t.to_string() << "\n";
    text << "  leading coefficient (unshifted): " << to_string(lead)
         << (sign(lead) == 0 ? " (dependent family)" : "") << "\n";

    int code = kExitOk;
    try {
        const ExpansionBudget budget = budget_of(flags);
        for (std::size_t i = 0; i < prefix; ++i) {
            Integer estimate(0);
            for (std::size_t b = 0; b < inst.num_bases(); ++b)
                if (!inst.bases[b].is_constant())
                    estimate += (inst.exponents[i][b] + Integer(prefix)) *
                                inst.bases[b].degree();
            if (estimate > budget.max_degree)
                throw budget_error("shifted power product too large to expand: degree " +
                                   estimate.get_str());
        }
        std::vector<SparsePoly> shifted;
        for (std::size_t i = 0; i < prefix; ++i) {
            SparsePoly g = SparsePoly::constant(1);
            for (std::size_t b = 0; b < inst.num_bases(); ++b)
                g = g * pow(inst.bases[b], inst.exponents[i][b] + Integer(prefix));
            shifted.push_back(g);
        }
        const bool match =
            (fw.reconstruct(inst.bases, budget) - wronskian_direct(shifted)).is_zero();
        j["identity_check"] = match ? "passed" : "failed";
        text << "  identity check against expanded determinant: "
             << (match ? "passed" : "FAILED") << "\n";
        if (!match) code = kExitSoundness;
    } catch (const budget_error& e) {
        j["identity_check"] = std::string("skipped: ") + e.what();
        text << "  identity check skipped: " << e.what() << "\n";
    }
    j["millis"] = Integer(elapsed_ms(start)).get_str();
    emit(j, flags.as_json, text.str());
    return code;
}

struct GenFlags {
    std::string kind = "random";
    std::string out;
    InstanceParams params;
    unsigned long p = 1;
};

int run_gen(const GenFlags& gen, const CommonFlags& flags) {
    SpsInstance inst;
    if (gen.kind == "random") {
        inst = random_instance(gen.params);
    } else if (gen.kind == "zero") {
        InstanceParams params = gen.params;
        params.force_zero = true;
        inst = random_instance(params);
    } else if (gen.kind == "optimal") {
        inst = optimal_instance(gen.params.k, gen.p).instance;
    } else if (gen.kind == "descartes") {
        inst = descartes_instance(gen.params.k, gen.params.alpha_max, gen.params.seed);
    } else {
        throw parse_error("unknown kind '" + gen.kind + "'", 1, 1);
    }

    const std::string text = serialize_instance(inst);
    if (gen.out.empty()) {
        if (flags.as_json) {
            json j;
            j["kind"] = gen.kind;
            j["instance"] = text;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << text;
        }
        return kExitOk;
    }
    std::ofstream out(gen.out);
    if (!out) throw parse_error("cannot write file '" + gen.out + "'", 1, 1);
    out << text;
    if (flags.as_json) {
        json j;
        j["kind"] = gen.kind;
        j["out"] = gen.out;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << gen.out << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const CommonFlags& flags) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);

    json results = json::array();
    bool any_failed = false;
    for (const std::string& name : names) {
        const SuiteResult res = run_suite(name);
        any_failed = any_failed || !res.passed();
        json j;
        j["suite"] = res.name;
        j["cases"] = Integer(res.cases).get_str();
        j["failures"] = Integer(res.failures).get_str();
        j["millis"] = Integer(static_cast<long>(res.millis)).get_str();
        j["passed"] = res.passed();
        j["notes"] = res.notes;
        results.push_back(j);
        if (!flags.as_json) {
            std::cout << (res.passed() ? "[PASS] " : "[FAIL] ") << res.name << " ("
                      << res.cases << " cases, " << res.millis << " ms)\n";
            for (const auto& note : res.notes) std::cout << "       " << note << "\n";
        }
    }
    if (flags.as_json) std::cout << results.dump(2) << "\n";
    return any_failed ? kExitSuiteFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root bounds, Wronskians and identity testing for sums of"
                 " products of powers of sparse polynomials"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* bound_cmd = app.add_subcommand("bound", "a-priori and certified root bounds");
    std::string bound_file, bound_method = "all";
    bool bound_exact = false;
    bound_cmd->add_option("file", bound_file, "instance file")->required();
    bound_cmd->add_option("--method", bound_method, "sparse|dense|upsilon|main3|all")
        ->check(CLI::IsMember({"sparse", "dense", "upsilon", "main3", "all"}));
    bound_cmd->add_flag("--exact", bound_exact,
                        "also count roots exactly and assert soundness");
    add_common(bound_cmd, flags);

    auto* pit_cmd = app.add_subcommand("pit", "polynomial identity testing");
    std::string pit_file, pit_mode = "whitebox", pit_model = "dense";
    pit_cmd->add_option("file", pit_file, "instance file")->required();
    pit_cmd->add_option("--mode", pit_mode, "blackbox|whitebox")
        ->check(CLI::IsMember({"blackbox", "whitebox"}));
    pit_cmd->add_option("--model", pit_model, "sparse|dense (blackbox bound)")
        ->check(CLI::IsMember({"sparse", "dense"}));
    add_common(pit_cmd, flags);

    auto* roots_cmd = app.add_subcommand("roots", "exact real-root report");
    std::string roots_file;
    bool roots_pit = false;
    roots_cmd->add_option("file", roots_file, "instance file")->required();
    roots_cmd->add_flag("--pit", roots_pit, "include both identity-test verdicts");
    add_common(roots_cmd, flags);

    auto* wr_cmd = app.add_subcommand("wronskian", "factored prefix Wronskian");
    std::string wr_file;
    std::size_t wr_prefix = 1;
    wr_cmd->add_option("file", wr_file, "instance file")->required();
    wr_cmd->add_option("--prefix", wr_prefix, "how many power products to take");
    add_common(wr_cmd, flags);

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    GenFlags gen;
    gen_cmd->add_option("--kind", gen.kind, "random|zero|optimal|descartes")
        ->check(CLI::IsMember({"random", "zero", "optimal", "descartes"}));
    gen_cmd->add_option("--out", gen.out, "output path (stdout if omitted)");
    gen_cmd->add_option("--k", gen.params.k, "number of terms");
    gen_cmd->add_option("--m", gen.params.m, "number of bases");
    gen_cmd->add_option("--t", gen.params.t, "largest base sparsity");
    gen_cmd->add_option("--d", gen.params.d, "largest base degree");
    gen_cmd->add_option("--alpha-max", gen.params.alpha_max, "largest exponent");
    gen_cmd->add_option("--coeff-max", gen.params.coeff_max, "largest coefficient size");
    gen_cmd->add_option("--seed", gen.params.seed, "generator seed");
    gen_cmd->add_option("--p", gen.p, "growth parameter of the optimal family");
    add_common(gen_cmd, flags);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite = "all";
    verify_cmd->add_option("--suite", verify_suite,
                           "power-derivative|factorization|soundness|pit-agreement|"
                           "optimality|frobenius|descartes|heart|all");
    add_common(verify_cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(bound_cmd))
            return run_bound(bound_file, bound_method, bound_exact, flags);
        if (app.got_subcommand(pit_cmd)) return run_pit(pit_file, pit_mode, pit_model, flags);
        if (app.got_subcommand(roots_cmd)) return run_roots(roots_file, roots_pit, flags);
        if (app.got_subcommand(wr_cmd)) return run_wronskian(wr_file, wr_prefix, flags);
        if (app.got_subcommand(gen_cmd)) return run_gen(gen, flags);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_suite, flags);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const budget_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSoundness;
    }
    return kExitOk;
}
