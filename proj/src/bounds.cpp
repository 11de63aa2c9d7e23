#include "wronsk/bounds.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "wronsk/errors.hpp"

namespace wronsk {

namespace {

/// Reduced family: zero-coefficient terms dropped, duplicate exponent rows
/// merged (their coefficients summed, vanishing sums dropped), bases that
/// no remaining row uses removed, and finally a greedy reduction to a
/// linearly independent subfamily of the power products.
struct PreparedFamily {
    std::vector<SparsePoly> bases;
    std::vector<PowerProduct> products;
};

PreparedFamily prepare_family(const SpsInstance& inst) {
    inst.validate();
    const std::size_t m = inst.num_bases();

    std::vector<PowerProduct> rows;
    std::vector<Rational> sums;
    std::map<PowerProduct, std::size_t> first_seen;
    for (std::size_t i = 0; i < inst.num_terms(); ++i) {
        if (sign(inst.coeffs[i]) == 0) continue;
        auto it = first_seen.find(inst.exponents[i]);
        if (it == first_seen.end()) {
            first_seen.emplace(inst.exponents[i], rows.size());
            rows.push_back(inst.exponents[i]);
            sums.push_back(inst.coeffs[i]);
        } else {
            sums[it->second] += inst.coeffs[i];
        }
    }

    std::vector<PowerProduct> kept;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (sign(sums[i]) != 0) kept.push_back(rows[i]);

    PreparedFamily out;
    if (kept.empty()) return out;

    std::vector<bool> used(m, false);
    for (const auto& row : kept)
        for (std::size_t j = 0; j < m; ++j)
            if (row[j] > 0) used[j] = true;

    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m; ++j)
        if (used[j]) cols.push_back(j);

    if (cols.empty()) {
        // Every surviving row is the all-zero row; after merging there is
        // exactly one, the constant term. Represent it over the base 1.
        out.bases.push_back(SparsePoly::constant(1));
        out.products.push_back(PowerProduct{Integer(0)});
    } else {
        for (std::size_t j : cols) out.bases.push_back(inst.bases[j]);
        for (const auto& row : kept) {
            PowerProduct slim;
            slim.reserve(cols.size());
            for (std::size_t j : cols) slim.push_back(row[j]);
            out.products.push_back(std::move(slim));
        }
    }

    std::vector<std::size_t> basis = independent_subfamily(out.bases, out.products);
    std::vector<PowerProduct> reduced;
    reduced.reserve(basis.size());
    for (std::size_t i : basis) reduced.push_back(out.products[i]);
    out.products = std::move(reduced);
    return out;
}

/// Squarefree part of prod_j f_j * prod_{s<=k} det_t(s): its roots are the
/// base roots together with the extra zeros of every prefix Wronskian of
/// the shifted power products.
SparsePoly upsilon_radical(const PreparedFamily& fam) {
    SparsePoly product = SparsePoly::constant(1);
    for (const auto& base : fam.bases) product = product * base;
    for (std::size_t s = 1; s <= fam.products.size(); ++s)
        product = product * factored_wronskian(fam.bases, fam.products, s).det_t;
    return squarefree_part(product);
}

}  // namespace

Integer bound_sparse(std::size_t k, std::size_t m, unsigned long t) {
    if (k == 0 || m == 0 || t == 0)
        throw std::invalid_argument("shape parameters must be positive");
    const Rational growth = euler_upper_bound() * (Rational(t) + 1);
    const Integer exponent = Integer(k) * Integer(k) * Integer(m);
    const Rational power = pow_rational(growth, exponent);
    return 4 * Integer(k) * Integer(t) * Integer(m) + ceil_sqrt(16 * power);
}

Integer bound_dense(std::size_t k, std::size_t m, const Integer& d) {
    if (k == 0 || m == 0 || d < 0)
        throw std::invalid_argument("shape parameters must be positive");
    const Rational kk{Integer(k)}, mm{Integer(m)}, dd{d};
    const Rational value = kk * kk * kk * mm * dd / 3 + 2 * kk * mm * dd + kk;
    return ceil_rational(value);
}

CertifiedUpsilon certified_bound_upsilon(const SpsInstance& inst) {
    PreparedFamily fam = prepare_family(inst);
    if (fam.products.empty())
        throw std::invalid_argument("no nonzero terms");

    CertifiedUpsilon out;
    out.reduced_k = fam.products.size();
    out.upsilon.radical = upsilon_radical(fam);
    RootIsolator iso(out.upsilon.radical);
    out.upsilon.size = iso.count_all();
    out.upsilon.points = iso.isolate();
    out.bound = (Integer(1) + Integer(out.upsilon.size)) * Integer(out.reduced_k) - 1;
    return out;
}

CertifiedMain3 certified_bound_main3(const SpsInstance& inst,
                                     const ExpansionBudget& budget) {
    PreparedFamily fam = prepare_family(inst);
    if (fam.products.empty())
        throw std::invalid_argument("no nonzero terms");

    CertifiedMain3 out;
    const std::size_t k = fam.products.size();
    out.reduced_k = k;
    out.prefix_root_counts.reserve(k);
    for (std::size_t s = 1; s <= k; ++s) {
        SparsePoly w = power_product_wronskian(fam.bases, fam.products, s, budget);
        out.prefix_root_counts.push_back(count_real_roots(w));
    }

    Integer bound = Integer(k) - 1;
    bound += Integer(out.prefix_root_counts[k - 1]);
    if (k >= 2) bound += Integer(out.prefix_root_counts[k - 2]);
    for (std::size_t s = 1; s + 2 <= k; ++s)
        bound += 2 * Integer(out.prefix_root_counts[s - 1]);
    out.bound = bound;
    return out;
}

HeartOutcome interval_bound_heart(const SpsInstance& inst, const ExpansionBudget& budget) {
    const SparsePoly expanded = expand(inst, budget);
    if (expanded.is_zero())
        throw std::invalid_argument("zero instance");

    PreparedFamily fam = prepare_family(inst);
    const SparsePoly radical = upsilon_radical(fam);
    const RootIsolator iso_points(radical);
    const RootIsolator iso_roots(expanded);
    const RootIsolator iso_shared(gcd(squarefree_part(expanded), radical));

    // Shrink each isolating interval of the point set until the roots of
    // the expansion inside it are exactly the shared ones (0 or 1); every
    // other root of the expansion is then strictly between two intervals.
    std::vector<RationalInterval> windows = iso_points.isolate();
    for (auto& window : windows) {
        const unsigned long target = iso_shared.count(window);
        unsigned long steps = 0;
        while (iso_roots.count(window) != target) {
            if (++steps > 100000) throw budget_error("interval refinement did not settle");
            window = iso_points.refine(window);
        }
    }

    HeartOutcome out;
    out.reduced_k = fam.products.size();
    out.intervals = static_cast<unsigned long>(windows.size()) + 1;

    std::vector<unsigned long> counts;
    if (windows.empty()) {
        counts.push_back(iso_roots.count_all());
    } else {
        counts.push_back(iso_roots.count(
            RationalInterval::left_of(*windows.front().lo, /*closed=*/true)));
        for (std::size_t i = 0; i + 1 < windows.size(); ++i)
            counts.push_back(iso_roots.count(
                RationalInterval::closed(*windows[i].hi, *windows[i + 1].lo)));
        counts.push_back(iso_roots.count(
            RationalInterval::right_of(*windows.back().hi, /*closed=*/true)));
    }

    unsigned long worst = 0;
    for (unsigned long c : counts) worst = std::max(worst, c);
    out.max_interval_count = worst;
    out.holds = out.reduced_k >= 1 &&
                Integer(worst) <= Integer(out.reduced_k) - 1;
    return out;
}

GapReport open_problem_gap(const SpsInstance& inst, const ExpansionBudget& budget) {
    const SparsePoly expanded = expand(inst, budget);
    if (expanded.is_zero())
        throw std::invalid_argument("zero instance");

    PreparedFamily fam = prepare_family(inst);
    GapReport out;
    out.reduced_k = fam.products.size();
    out.lhs = Integer(count_real_roots(expanded));

    Integer rhs = Integer(out.reduced_k) - 1;
    for (std::size_t s = 1; s <= fam.products.size(); ++s) {
        const FactoredWronskian fw = factored_wronskian(fam.bases, fam.products, s);
        rhs += Integer(count_real_roots(fw.reconstruct(fam.bases, budget)));
    }
    out.rhs = rhs;
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace wronsk
