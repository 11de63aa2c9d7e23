#include "wronsk/pit.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "wronsk/bounds.hpp"
#include "wronsk/errors.hpp"

namespace wronsk {

namespace {

/// Term list after the whitebox preprocessing: zero coefficients dropped,
/// duplicate exponent rows merged into their first occurrence.
struct MergedTerms {
    std::vector<std::size_t> rep;     // original index of each merged row
    std::vector<PowerProduct> rows;   // projected onto used bases
    std::vector<Rational> coeffs;     // summed coefficients
    std::vector<SparsePoly> bases;    // used bases only (never zero)
};

MergedTerms merge_terms(const SpsInstance& inst) {
    const std::size_t m = inst.num_bases();
    MergedTerms out;
    std::map<PowerProduct, std::size_t> first_seen;
    std::vector<PowerProduct> rows;
    for (std::size_t i = 0; i < inst.num_terms(); ++i) {
        if (sign(inst.coeffs[i]) == 0) continue;
        auto it = first_seen.find(inst.exponents[i]);
        if (it == first_seen.end()) {
            first_seen.emplace(inst.exponents[i], rows.size());
            rows.push_back(inst.exponents[i]);
            out.rep.push_back(i);
            out.coeffs.push_back(inst.coeffs[i]);
        } else {
            out.coeffs[it->second] += inst.coeffs[i];
        }
    }

    std::vector<bool> used(m, false);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < m; ++j)
            if (row[j] > 0) used[j] = true;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m; ++j)
        if (used[j]) cols.push_back(j);

    if (cols.empty()) {
        out.bases.push_back(SparsePoly::constant(1));
        for (std::size_t r = 0; r < rows.size(); ++r)
            out.rows.push_back(PowerProduct{Integer(0)});
    } else {
        for (std::size_t j : cols) out.bases.push_back(inst.bases[j]);
        for (auto& row : rows) {
            PowerProduct slim;
            slim.reserve(cols.size());
            for (std::size_t j : cols) slim.push_back(row[j]);
            out.rows.push_back(std::move(slim));
        }
    }
    return out;
}

Integer blackbox_bound(const SpsInstance& inst, PitModel model, std::size_t live_terms) {
    if (model == PitModel::sparse)
        return bound_sparse(live_terms, inst.num_bases(), inst.max_base_sparsity());
    return bound_dense(live_terms, inst.num_bases(), inst.max_base_degree());
}

}  // namespace

Rational evaluate_instance(const SpsInstance& inst, const Rational& x) {
    inst.validate();
    std::vector<Rational> base_values;
    base_values.reserve(inst.num_bases());
    for (const auto& f : inst.bases) base_values.push_back(eval(f, x));

    Rational total(0);
    for (std::size_t i = 0; i < inst.num_terms(); ++i) {
        if (sign(inst.coeffs[i]) == 0) continue;
        Rational term = inst.coeffs[i];
        for (std::size_t j = 0; j < inst.num_bases(); ++j)
            term *= pow_rational(base_values[j], inst.exponents[i][j]);
        total += term;
    }
    return total;
}

PitVerdict pit_blackbox(const SpsInstance& inst, PitModel model, unsigned long max_queries) {
    inst.validate();
    PitVerdict verdict;
    verdict.bound_used = 0;

    std::size_t live_terms = 0;
    for (const auto& c : inst.coeffs)
        if (sign(c) != 0) ++live_terms;
    if (live_terms == 0) {
        verdict.is_zero = true;
        return verdict;
    }

    const Integer bound = blackbox_bound(inst, model, live_terms);
    verdict.bound_used = bound;
    if (bound + 1 > max_queries)
        throw budget_error("query budget exceeded: bound needs " +
                           Integer(bound + 1).get_str() + " evaluations");

    for (Integer x = 1; x <= bound + 1; ++x) {
        const Rational value = evaluate_instance(inst, Rational(x));
        ++verdict.query_count;
        if (sign(value) != 0) {
            verdict.is_zero = false;
            verdict.witness = x;
            return verdict;
        }
    }
    verdict.is_zero = true;
    return verdict;
}

PitVerdict pit_whitebox(const SpsInstance& inst, std::size_t basis_cap) {
    inst.validate();
    if (basis_cap == 0) throw std::invalid_argument("basis cap must be positive");
    MergedTerms merged = merge_terms(inst);

    PitVerdict verdict;
    verdict.bound_used = 0;
    std::vector<PowerProduct> basis_rows;

    for (std::size_t r = 0; r < merged.rows.size(); ++r) {
        if (sign(merged.coeffs[r]) == 0) continue;  // duplicates cancelled

        std::vector<PowerProduct> candidate = basis_rows;
        candidate.push_back(merged.rows[r]);
        const Rational top = wronskian_leading_coefficient(merged.bases, candidate);
        ++verdict.query_count;

        if (sign(top) != 0) {
            if (basis_rows.size() == basis_cap)
                throw budget_error("whitebox basis exceeds cap of " +
                                   std::to_string(basis_cap));
            basis_rows.push_back(merged.rows[r]);
            verdict.basis.push_back(merged.rep[r]);
            verdict.basis_coeffs.push_back(merged.coeffs[r]);
            continue;
        }

        const Rational denom = wronskian_leading_coefficient(merged.bases, basis_rows);
        ++verdict.query_count;
        PitDependency dep;
        dep.term = merged.rep[r];
        for (std::size_t q = 0; q < basis_rows.size(); ++q) {
            std::vector<PowerProduct> replaced = basis_rows;
            replaced[q] = merged.rows[r];
            const Rational numer = wronskian_leading_coefficient(merged.bases, replaced);
            ++verdict.query_count;
            const Rational c = numer / denom;
            dep.coeffs.push_back(c);
            verdict.basis_coeffs[q] += merged.coeffs[r] * c;
        }
        verdict.certificate.push_back(std::move(dep));
    }

    // Dependencies found while the basis was still growing are padded so
    // every record lines up with the final basis.
    for (auto& dep : verdict.certificate)
        dep.coeffs.resize(verdict.basis.size(), Rational(0));

    verdict.is_zero = true;
    for (const auto& c : verdict.basis_coeffs)
        if (sign(c) != 0) verdict.is_zero = false;
    return verdict;
}

bool certificate_check(const SpsInstance& inst, const PitVerdict& verdict) {
    inst.validate();
    const std::size_t k = inst.num_terms();
    for (std::size_t i : verdict.basis)
        if (i >= k) return false;
    if (verdict.basis_coeffs.size() != verdict.basis.size()) return false;

    bool coeffs_all_zero = true;
    for (const auto& c : verdict.basis_coeffs)
        if (sign(c) != 0) coeffs_all_zero = false;
    if (verdict.is_zero != coeffs_all_zero) return false;

    // Each recorded dependency must be an exact identity:
    //   product(term) - sum_q coeffs[q] * product(basis[q]) == 0.
    for (const auto& dep : verdict.certificate) {
        if (dep.term >= k || dep.coeffs.size() != verdict.basis.size()) return false;
        SpsInstance diff;
        diff.bases = inst.bases;
        diff.coeffs.push_back(Rational(1));
        diff.exponents.push_back(inst.exponents[dep.term]);
        for (std::size_t q = 0; q < verdict.basis.size(); ++q) {
            diff.coeffs.push_back(-dep.coeffs[q]);
            diff.exponents.push_back(inst.exponents[verdict.basis[q]]);
        }
        if (!pit_blackbox(diff, PitModel::dense).is_zero) return false;
    }

    // The whole sum must agree with its claimed basis decomposition.
    SpsInstance total;
    total.bases = inst.bases;
    total.coeffs = inst.coeffs;
    total.exponents = inst.exponents;
    for (std::size_t q = 0; q < verdict.basis.size(); ++q) {
        total.coeffs.push_back(-verdict.basis_coeffs[q]);
        total.exponents.push_back(inst.exponents[verdict.basis[q]]);
    }
    return pit_blackbox(total, PitModel::dense).is_zero;
}

}  // namespace wronsk
