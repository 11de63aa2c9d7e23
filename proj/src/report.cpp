#include "wronsk/report.hpp"

#include <sstream>

#include "wronsk/errors.hpp"
#include "wronsk/real_roots.hpp"

namespace wronsk {

namespace {

std::string dec(const Integer& z) { return z.get_str(); }

nlohmann::json opt_dec(const std::optional<Integer>& z) {
    if (!z) return nullptr;
    return dec(*z);
}

}  // namespace

bool RootReport::sound() const {
    if (!exact_count) return true;
    const Integer& count = *exact_count;
    for (const auto& bound : {a_priori_sparse, a_priori_dense, certified_upsilon,
                              certified_main3})
        if (bound && count > *bound) return false;
    return true;
}

RootReport build_root_report(const SpsInstance& inst, const ReportOptions& opts) {
    inst.validate();
    RootReport report;
    report.instance_echo = serialize_instance(inst);
    report.terms = inst.num_terms();
    report.bases = inst.num_bases();
    report.max_sparsity = inst.max_base_sparsity();
    report.max_degree = inst.max_base_degree();

    try {
        report.a_priori_sparse =
            bound_sparse(report.terms, report.bases, report.max_sparsity);
    } catch (const budget_error& e) {
        report.notes.push_back(std::string("a_priori_sparse not applicable: ") + e.what());
    }
    report.a_priori_dense = bound_dense(report.terms, report.bases, report.max_degree);

    try {
        const CertifiedUpsilon up = certified_bound_upsilon(inst);
        report.certified_upsilon = up.bound;
        report.upsilon_size = up.upsilon.size;
        report.reduced_k = up.reduced_k;
    } catch (const std::invalid_argument& e) {
        report.notes.push_back(std::string("certified_upsilon not applicable: ") + e.what());
    } catch (const budget_error& e) {
        report.notes.push_back(std::string("certified_upsilon not applicable: ") + e.what());
    }
    try {
        const CertifiedMain3 m3 = certified_bound_main3(inst, opts.budget);
        report.certified_main3 = m3.bound;
        report.reduced_k = m3.reduced_k;
    } catch (const std::invalid_argument& e) {
        report.notes.push_back(std::string("certified_main3 not applicable: ") + e.what());
    } catch (const budget_error& e) {
        report.notes.push_back(std::string("certified_main3 not applicable: ") + e.what());
    }

    if (opts.exact) {
        try {
            const SparsePoly expanded = expand(inst, opts.budget);
            if (expanded.is_zero()) {
                report.instance_zero = true;
                report.notes.push_back("exact_count not applicable: instance is identically zero");
            } else {
                report.expanded_degree = expanded.degree();
                report.exact_count = Integer(count_real_roots(expanded));
                if (opts.isolate) report.isolating = isolate_roots(expanded);
            }
        } catch (const budget_error& e) {
            report.notes.push_back(std::string("exact_count not applicable: ") + e.what());
        }
    }

    if (opts.run_pit) {
        try {
            report.pit_blackbox_verdict =
                pit_blackbox(inst, PitModel::dense, opts.max_queries);
        } catch (const budget_error& e) {
            report.notes.push_back(std::string("pit_blackbox not applicable: ") + e.what());
        }
        try {
            report.pit_whitebox_verdict = pit_whitebox(inst, opts.basis_cap);
        } catch (const budget_error& e) {
            report.notes.push_back(std::string("pit_whitebox not applicable: ") + e.what());
        }
    }
    return report;
}

nlohmann::json interval_to_json(const RationalInterval& iv) {
    nlohmann::json j;
    j["lo"] = iv.lo ? nlohmann::json(to_string(*iv.lo)) : nlohmann::json(nullptr);
    j["hi"] = iv.hi ? nlohmann::json(to_string(*iv.hi)) : nlohmann::json(nullptr);
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    return j;
}

nlohmann::json verdict_to_json(const PitVerdict& v) {
    nlohmann::json j;
    j["is_zero"] = v.is_zero;
    j["witness"] = v.witness ? nlohmann::json(dec(*v.witness)) : nlohmann::json(nullptr);
    j["query_count"] = dec(Integer(v.query_count));
    j["bound_used"] = dec(v.bound_used);
    j["basis"] = nlohmann::json::array();
    for (std::size_t i : v.basis) j["basis"].push_back(dec(Integer(i)));
    j["basis_coeffs"] = nlohmann::json::array();
    for (const auto& c : v.basis_coeffs) j["basis_coeffs"].push_back(to_string(c));
    j["certificate"] = nlohmann::json::array();
    for (const auto& dep : v.certificate) {
        nlohmann::json d;
        d["term"] = dec(Integer(dep.term));
        d["coeffs"] = nlohmann::json::array();
        for (const auto& c : dep.coeffs) d["coeffs"].push_back(to_string(c));
        j["certificate"].push_back(d);
    }
    return j;
}

nlohmann::json report_to_json(const RootReport& r) {
    nlohmann::json j;
    j["instance"] = r.instance_echo;
    j["terms"] = dec(Integer(r.terms));
    j["bases"] = dec(Integer(r.bases));
    j["max_sparsity"] = dec(Integer(r.max_sparsity));
    j["max_degree"] = dec(r.max_degree);
    j["instance_zero"] = r.instance_zero;
    j["exact_count"] = opt_dec(r.exact_count);
    j["expanded_degree"] = opt_dec(r.expanded_degree);
    j["a_priori_sparse"] = opt_dec(r.a_priori_sparse);
    j["a_priori_dense"] = opt_dec(r.a_priori_dense);
    j["certified_upsilon"] = opt_dec(r.certified_upsilon);
    j["certified_main3"] = opt_dec(r.certified_main3);
    j["upsilon_size"] =
        r.upsilon_size ? nlohmann::json(dec(Integer(*r.upsilon_size))) : nlohmann::json(nullptr);
    j["reduced_k"] = dec(Integer(r.reduced_k));
    j["isolating"] = nlohmann::json::array();
    for (const auto& iv : r.isolating) j["isolating"].push_back(interval_to_json(iv));
    j["pit_blackbox"] = r.pit_blackbox_verdict ? verdict_to_json(*r.pit_blackbox_verdict)
                                               : nlohmann::json(nullptr);
    j["pit_whitebox"] = r.pit_whitebox_verdict ? verdict_to_json(*r.pit_whitebox_verdict)
                                               : nlohmann::json(nullptr);
    j["notes"] = r.notes;
    j["sound"] = r.sound();
    return j;
}

std::string render_report_text(const RootReport& r) {
    std::ostringstream out;
    auto line = [&out](const std::string& label, const std::optional<Integer>& v) {
        out << label << ": " << (v ? v->get_str() : "not applicable") << "\n";
    };
    out << "terms: " << r.terms << "  bases: " << r.bases
        << "  max sparsity: " << r.max_sparsity
        << "  max degree: " << r.max_degree.get_str() << "\n";
    if (r.instance_zero) out << "instance is identically zero\n";
    line("exact distinct real roots", r.exact_count);
    line("a-priori bound (sparse model)", r.a_priori_sparse);
    line("a-priori bound (dense model)", r.a_priori_dense);
    line("certified bound (distinguished points)", r.certified_upsilon);
    line("certified bound (prefix Wronskian roots)", r.certified_main3);
    if (r.upsilon_size)
        out << "distinguished points: " << *r.upsilon_size
            << " (family reduced to " << r.reduced_k << ")\n";
    for (const auto& iv : r.isolating) out << "  root in " << iv.to_string() << "\n";
    if (r.pit_blackbox_verdict) {
        const auto& v = *r.pit_blackbox_verdict;
        out << "blackbox: " << (v.is_zero ? "zero" : "nonzero");
        if (v.witness) out << " (witness " << v.witness->get_str() << ")";
        out << ", " << v.query_count << " queries, bound " << v.bound_used.get_str() << "\n";
    }
    if (r.pit_whitebox_verdict) {
        const auto& v = *r.pit_whitebox_verdict;
        out << "whitebox: " << (v.is_zero ? "zero" : "nonzero") << ", basis size "
            << v.basis.size() << ", " << v.query_count << " independence tests\n";
    }
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

}  // namespace wronsk
