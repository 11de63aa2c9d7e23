#include "wronsk/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wronsk/bounds.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/instance.hpp"
#include "wronsk/pit.hpp"
#include "wronsk/power_derivative.hpp"
#include "wronsk/real_roots.hpp"
#include "wronsk/wronskian.hpp"
#include "rng.hpp"

namespace wronsk {

namespace {

using detail::Rng;

void fail(SuiteResult& res, std::size_t case_index, const std::string& what) {
    ++res.failures;
    if (res.notes.size() < 10) {
        std::ostringstream os;
        os << "case " << case_index << ": " << what;
        res.notes.push_back(os.str());
    }
}

/// Nonzero polynomial with sparsity in [1, max_terms], distinct exponents
/// in [0, max_degree], coefficients in [-9, 9] \ {0}.
SparsePoly random_poly(Rng& rng, unsigned long max_terms, unsigned long max_degree) {
    const unsigned long want = 1 + rng.below(max_terms);
    std::vector<SparsePoly::Term> terms;
    std::vector<bool> taken(max_degree + 1, false);
    for (unsigned long i = 0; i < want && i <= max_degree; ++i) {
        unsigned long e;
        do {
            e = rng.below(max_degree + 1);
        } while (taken[e]);
        taken[e] = true;
        terms.push_back({Integer(e), Rational(rng.signed_nonzero(9))});
    }
    return SparsePoly::from_terms(std::move(terms));
}

// The derivative of a power through the partition formula must equal the
// derivative of the expanded power, term for term.
SuiteResult suite_power_derivative() {
    SuiteResult res{"power-derivative"};
    Rng rng(101);
    for (std::size_t c = 0; c < 200; ++c) {
        ++res.cases;
        const SparsePoly f = random_poly(rng, 4, 4);
        const unsigned long p = rng.below(6);                       // p <= 5
        const unsigned long alpha = p + rng.below(9 - p);           // p <= alpha <= 8
        const SparsePoly via_formula = power_derivative(f, alpha, p);
        const SparsePoly via_expansion = derivative(pow(f, Integer(alpha)), p);
        if (!(via_formula - via_expansion).is_zero())
            fail(res, c, "formula disagrees with expanded derivative (alpha=" +
                             std::to_string(alpha) + ", p=" + std::to_string(p) + ")");
    }
    return res;
}

// The factored Wronskian of the shifted power products must reconstruct to
// exactly the determinant of the expanded derivative matrix, prefix by
// prefix.
SuiteResult suite_factorization() {
    SuiteResult res{"factorization"};
    Rng rng(202);
    for (std::size_t c = 0; c < 100; ++c) {
        ++res.cases;
        InstanceParams params;
        params.k = 1 + rng.below(3);
        params.m = 1 + rng.below(2);
        params.t = 1 + rng.below(3);
        params.d = 1 + rng.below(3);        // deg f_j <= 3
        params.alpha_max = 1 + rng.below(4);  // alpha <= 4
        params.coeff_max = 9;
        params.seed = 9000 + c;
        const SpsInstance inst = random_instance(params);
        for (std::size_t prefix = 1; prefix <= inst.num_terms(); ++prefix) {
            const FactoredWronskian fw =
                factored_wronskian(inst.bases, inst.exponents, prefix);
            std::vector<SparsePoly> shifted;
            for (std::size_t i = 0; i < prefix; ++i) {
                SparsePoly g = SparsePoly::constant(1);
                for (std::size_t j = 0; j < inst.num_bases(); ++j)
                    g = g * pow(inst.bases[j], inst.exponents[i][j] + Integer(prefix));
                shifted.push_back(g);
            }
            if (!(fw.reconstruct(inst.bases) - wronskian_direct(shifted)).is_zero()) {
                fail(res, c, "factored form disagrees with direct Wronskian at prefix " +
                                 std::to_string(prefix));
                break;
            }
        }
    }
    return res;
}

// Exact distinct-root count of every nonzero expansion stays at or below
// all four bounds.
SuiteResult suite_soundness() {
    SuiteResult res{"soundness"};
    Rng rng(303);
    std::size_t produced = 0;
    std::uint64_t attempt = 0;
    while (produced < 500) {
        InstanceParams params;
        params.k = 1 + rng.below(3);
        params.m = 1 + rng.below(2);
        params.t = 1 + rng.below(3);
        params.d = 1 + rng.below(4);
        params.alpha_max = 1 + rng.below(4);
        params.coeff_max = 9;
        params.seed = 20000 + attempt++;
        const SpsInstance inst = random_instance(params);
        SparsePoly expanded;
        try {
            expanded = expand(inst);
        } catch (const budget_error&) {
            continue;
        }
        if (expanded.is_zero()) continue;
        ++produced;
        ++res.cases;
        const Integer exact(count_real_roots(expanded));
        const Integer sparse_bound = bound_sparse(
            inst.num_terms(), inst.num_bases(), inst.max_base_sparsity());
        const Integer dense_bound = bound_dense(
            inst.num_terms(), inst.num_bases(), inst.max_base_degree());
        const CertifiedUpsilon up = certified_bound_upsilon(inst);
        const CertifiedMain3 m3 = certified_bound_main3(inst);
        if (exact > sparse_bound)
            fail(res, produced, "sparse bound violated: " + exact.get_str() + " > " +
                                    sparse_bound.get_str());
        if (exact > dense_bound)
            fail(res, produced, "dense bound violated: " + exact.get_str() + " > " +
                                    dense_bound.get_str());
        if (exact > up.bound)
            fail(res, produced, "distinguished-point bound violated: " + exact.get_str() +
                                    " > " + up.bound.get_str());
        if (exact > m3.bound)
            fail(res, produced, "prefix-Wronskian bound violated: " + exact.get_str() +
                                    " > " + m3.bound.get_str());
    }
    return res;
}

// Blackbox, whitebox and the expansion oracle must give one verdict;
// query counts stay within 1 + bound; certificates verify independently.
SuiteResult suite_pit_agreement() {
    SuiteResult res{"pit-agreement"};
    Rng rng(404);
    for (std::size_t c = 0; c < 300; ++c) {
        ++res.cases;
        InstanceParams params;
        params.force_zero = (c % 2 == 0);
        params.k = params.force_zero ? 2 + rng.below(3) : 1 + rng.below(4);
        params.m = 1 + rng.below(2);
        params.t = 1 + rng.below(3);
        params.d = 1 + rng.below(2);
        params.alpha_max = 1 + rng.below(2);
        params.coeff_max = 5;
        params.seed = 40000 + c;
        const SpsInstance inst = random_instance(params);

        const bool oracle_zero = expand(inst).is_zero();
        const PitVerdict black = pit_blackbox(inst, PitModel::dense);
        const PitVerdict white = pit_whitebox(inst);

        if (black.is_zero != oracle_zero)
            fail(res, c, "blackbox disagrees with expansion oracle");
        if (white.is_zero != oracle_zero)
            fail(res, c, "whitebox disagrees with expansion oracle");
        if (Integer(black.query_count) > black.bound_used + 1)
            fail(res, c, "blackbox query count exceeds 1 + bound");
        if (!certificate_check(inst, white))
            fail(res, c, "whitebox certificate failed verification");

        // Where the sparse-model bound is small enough to enumerate, the
        // sparse blackbox must agree as well.
        const Integer sparse_bound = bound_sparse(
            inst.num_terms(), inst.num_bases(), inst.max_base_sparsity());
        if (sparse_bound <= 5000) {
            const PitVerdict sparse_black = pit_blackbox(inst, PitModel::sparse);
            if (sparse_black.is_zero != oracle_zero)
                fail(res, c, "sparse-model blackbox disagrees with expansion oracle");
            if (Integer(sparse_black.query_count) > sparse_black.bound_used + 1)
                fail(res, c, "sparse-model query count exceeds 1 + bound");
        }
    }
    return res;
}

// The composed construction achieves its predicted counts exactly, and
// meets the tightness inequality against the certified bound's shape.
SuiteResult suite_optimality() {
    SuiteResult res{"optimality"};
    for (unsigned long k = 2; k <= 3; ++k) {
        for (unsigned long p = 1; p <= 3; ++p) {
            ++res.cases;
            const std::size_t c = res.cases;
            const OptimalInstance opt = optimal_instance(k, p);
            const SparsePoly g = expand(opt.instance);
            const SparsePoly f = opt.instance.bases[0];

            const Integer outer_roots(count_real_roots(g));
            if (outer_roots != opt.predicted_root_count) {
                fail(res, c, "k=" + std::to_string(k) + " p=" + std::to_string(p) +
                                 ": root count " + outer_roots.get_str() + " != predicted " +
                                 opt.predicted_root_count.get_str());
                continue;
            }

            const CertifiedUpsilon up = certified_bound_upsilon(opt.instance);
            const Integer upsilon_direct(count_real_roots(f * derivative(f)));
            if (Integer(up.upsilon.size) != opt.predicted_upsilon)
                fail(res, c, "distinguished-point count " +
                                 std::to_string(up.upsilon.size) + " != predicted " +
                                 opt.predicted_upsilon.get_str());
            if (upsilon_direct != opt.predicted_upsilon)
                fail(res, c, "roots of f*f' disagree with predicted point count");

            const Integer inner_roots(count_real_roots(f));
            if (inner_roots != opt.predicted_inner_roots)
                fail(res, c, "inner root count disagrees with prediction");

            // Z(g) >= (1 + |points|) * (k - 1) + Z(f): the construction
            // shows the certified bound's shape cannot be improved much.
            const Integer tight =
                (1 + Integer(up.upsilon.size)) * (Integer(k) - 1) + inner_roots;
            if (outer_roots < tight)
                fail(res, c, "tightness inequality failed: " + outer_roots.get_str() +
                                 " < " + tight.get_str());
        }
    }
    return res;
}

// The recurrence that peels one summand off a sum of k functions closes
// exactly on the k-th Wronskian.
SuiteResult suite_frobenius() {
    SuiteResult res{"frobenius"};
    Rng rng(606);
    for (std::size_t c = 0; c < 50; ++c) {
        ++res.cases;
        const std::size_t k = 2 + rng.below(3);  // k <= 4
        // Distinct degrees make the family independent by triangularity.
        std::vector<bool> taken(8, false);
        std::vector<SparsePoly> family;
        for (std::size_t i = 0; i < k; ++i) {
            unsigned long deg;
            do {
                deg = rng.below(7);
            } while (taken[deg]);
            taken[deg] = true;
            SparsePoly f = SparsePoly::monomial(Rational(rng.signed_nonzero(5)), Integer(deg));
            for (unsigned long lower = 0; lower < deg; ++lower)
                if (rng.coin())
                    f = f + SparsePoly::monomial(Rational(rng.signed_nonzero(5)),
                                                 Integer(lower));
            family.push_back(f);
        }
        try {
            if (!frobenius_check(family))
                fail(res, c, "recurrence did not close on the full Wronskian");
        } catch (const std::invalid_argument& e) {
            fail(res, c, std::string("unexpected dependence: ") + e.what());
        }
    }
    return res;
}

// Distinct real roots of a k-sparse polynomial never exceed 2k - 1, and
// positive roots never exceed the sign-change count.
SuiteResult suite_descartes() {
    SuiteResult res{"descartes"};
    Rng rng(707);
    for (std::size_t c = 0; c < 200; ++c) {
        ++res.cases;
        const unsigned long k = 1 + rng.below(6);
        const SparsePoly p = random_poly(rng, k, 12);
        const unsigned long sparsity = p.sparsity();
        const unsigned long roots = count_real_roots(p);
        if (roots > 2 * sparsity - 1)
            fail(res, c, "sparse root bound violated: " + std::to_string(roots) + " > " +
                             std::to_string(2 * sparsity - 1));
        const unsigned long positive =
            count_roots_in(p, RationalInterval::right_of(Rational(0), false));
        if (positive > descartes_positive_bound(p))
            fail(res, c, "positive roots exceed sign changes");
    }
    return res;
}

// Between consecutive distinguished points, a nonzero instance may carry
// at most k - 1 distinct roots.
SuiteResult suite_heart() {
    SuiteResult res{"heart"};
    Rng rng(808);
    std::size_t produced = 0;
    std::uint64_t attempt = 0;
    while (produced < 50) {
        InstanceParams params;
        params.k = 1 + rng.below(3);
        params.m = 1 + rng.below(2);
        params.t = 1 + rng.below(3);
        params.d = 1 + rng.below(2);
        params.alpha_max = 1 + rng.below(2);
        params.coeff_max = 5;
        params.seed = 80000 + attempt++;
        const SpsInstance inst = random_instance(params);
        try {
            if (expand(inst).is_zero()) continue;
        } catch (const budget_error&) {
            continue;
        }
        ++produced;
        ++res.cases;
        const HeartOutcome outcome = interval_bound_heart(inst);
        if (!outcome.holds)
            fail(res, produced,
                 "an interval between distinguished points carries " +
                     std::to_string(outcome.max_interval_count) + " roots with k=" +
                     std::to_string(outcome.reduced_k));
    }
    return res;
}

using SuiteFn = SuiteResult (*)();

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"power-derivative", suite_power_derivative},
        {"factorization", suite_factorization},
        {"soundness", suite_soundness},
        {"pit-agreement", suite_pit_agreement},
        {"optimality", suite_optimality},
        {"frobenius", suite_frobenius},
        {"descartes", suite_descartes},
        {"heart", suite_heart},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "power-derivative", "factorization", "soundness", "pit-agreement",
        "optimality",       "frobenius",     "descartes", "heart",
    };
    return names;
}

SuiteResult run_suite(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    const auto start = std::chrono::steady_clock::now();
    SuiteResult res = it->second();
    const auto stop = std::chrono::steady_clock::now();
    res.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return res;
}

}  // namespace wronsk
