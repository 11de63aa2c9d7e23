#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wronsk/budget.hpp"
#include "wronsk/sparse_poly.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/**
 * A sum of products of powers of sparse polynomials:
 *
 *   sum_i coeffs[i] * prod_j bases[j]^(exponents[i][j])
 *
 * with rational coefficients and arbitrary-precision nonnegative
 * exponents. The text form is line oriented:
 *
 *   bases <m>
 *   f<j>: <c>*x^<e> [+ <c>*x^<e> ...]     (one line per base, j = 1..m)
 *   terms <k>
 *   <a> : [f<j>^<alpha> ...]              (one line per term)
 *
 * '#' starts a comment, blank lines are skipped, coefficients are
 * integers or rationals "p/q", omitted bases have exponent 0.
 */
struct SpsInstance {
    std::vector<SparsePoly> bases;
    std::vector<Rational> coeffs;
    std::vector<PowerProduct> exponents;  // one row per term

    std::size_t num_terms() const { return coeffs.size(); }
    std::size_t num_bases() const { return bases.size(); }

    /// Largest base sparsity (at least 1, counting constants).
    unsigned long max_base_sparsity() const;

    /// Largest base degree; constant bases count as degree 0.
    Integer max_base_degree() const;

    /// Exact degree bound of the expansion: max over terms of
    /// sum_j exponent * deg f_j (ignoring possible cancellation).
    Integer expansion_degree_estimate() const;

    /// Shape checks: at least one base and one term, rows of width m,
    /// nonnegative exponents, no zero base raised to a positive power.
    /// Throws std::invalid_argument on violation.
    void validate() const;
};

/// Expands the instance into a single polynomial. The degree estimate is
/// checked before any multiplication; sparsity is watched as terms
/// accumulate. Throws budget_error("expansion too large") when a budget
/// would be exceeded.
SparsePoly expand(const SpsInstance& inst, const ExpansionBudget& budget = {});

/// Throws parse_error with 1-based line/column on malformed text.
SpsInstance parse_instance(const std::string& text);

/// Canonical form: bases in index order with monomials by increasing
/// exponent, terms in input order, exponent-0 factors omitted.
/// parse(serialize(x)) reproduces x exactly.
std::string serialize_instance(const SpsInstance& inst);

struct InstanceParams {
    std::size_t k = 2;          // number of terms
    std::size_t m = 1;          // number of bases
    unsigned long t = 2;        // max base sparsity
    unsigned long d = 2;        // max base degree
    unsigned long alpha_max = 2;
    unsigned long coeff_max = 5;
    std::uint64_t seed = 0;
    bool force_zero = false;    // cancel terms pairwise so the sum is 0
};

/// Deterministic in the seed: equal params give the identical instance.
SpsInstance random_instance(const InstanceParams& params);

/**
 * Single-base family whose root count meets the certified bound up to
 * lower-order terms: the outer polynomial x * prod_{i<k} (x^2 - i^2) is
 * k-sparse in odd powers with 2k - 1 simple real roots, and is composed
 * with f = k * prod (x - 2i) over 1 + ceil((p+1)/2) factors. Requires
 * k >= 2, p >= 1.
 */
struct OptimalInstance {
    SpsInstance instance;
    Integer predicted_root_count;   // (2k-1) * (1 + ceil((p+1)/2))
    Integer predicted_upsilon;      // 1 + 2 * ceil((p+1)/2), the roots of f*f'
    Integer predicted_inner_roots;  // 1 + ceil((p+1)/2), the roots of f
};

OptimalInstance optimal_instance(unsigned long k, unsigned long p);

/// k terms c_i * x^(a_i + k) with distinct a_i: the family whose certified
/// bound reproduces the classical sparse-polynomial root bound 2k - 1.
SpsInstance descartes_instance(std::size_t k, unsigned long alpha_max,
                               std::uint64_t seed);

}  // namespace wronsk
