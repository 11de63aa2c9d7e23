#pragma once

#include <cstddef>
#include <vector>

#include "wronsk/instance.hpp"
#include "wronsk/real_roots.hpp"

namespace wronsk {

/// A-priori bound on the distinct real roots of a nonzero instance with k
/// terms, m bases of sparsity at most t:
///
///   ceil(4ktm + 4 * (e * (1 + t))^(m k^2 / 2))
///
/// evaluated with a rational upper approximation of Euler's number and an
/// exact integer square root, so the result never under-approximates.
Integer bound_sparse(std::size_t k, std::size_t m, unsigned long t);

/// A-priori bound when base degrees are at most d:
///   ceil(k^3 m d / 3 + 2 k m d + k), exact rational arithmetic.
Integer bound_dense(std::size_t k, std::size_t m, const Integer& d);

/// The distinguished point set: real roots of the product of the prefix
/// Wronskians of the shifted power products, taken exactly as the radical
/// of that product (the base polynomials all divide it).
struct UpsilonSet {
    SparsePoly radical;
    unsigned long size = 0;
    std::vector<RationalInterval> points;
};

struct CertifiedUpsilon {
    Integer bound;     // (1 + size) * reduced_k - 1
    UpsilonSet upsilon;
    std::size_t reduced_k = 0;  // family size after reduction to a basis
};

/// Reduces the terms to a linearly independent subfamily (dropping zero
/// coefficients, duplicate exponent rows and unused bases first), computes
/// the point set from the factored prefix Wronskians, and returns the
/// certified bound (1 + |points|) * k - 1 for the reduced k. Sound for any
/// nonzero combination of the family. Throws std::invalid_argument when
/// nothing remains after reduction.
CertifiedUpsilon certified_bound_upsilon(const SpsInstance& inst);

struct CertifiedMain3 {
    Integer bound;
    std::vector<unsigned long> prefix_root_counts;  // Z(W_1) .. Z(W_k)
    std::size_t reduced_k = 0;
};

/// Exact root counts of every prefix Wronskian of the (unshifted, reduced)
/// power products, combined into
///   k - 1 + Z(W_k) + Z(W_{k-1}) + 2 * sum_{j<=k-2} Z(W_j).
/// Throws budget_error when a prefix Wronskian exceeds the degree budget.
CertifiedMain3 certified_bound_main3(const SpsInstance& inst,
                                     const ExpansionBudget& budget = {});

struct HeartOutcome {
    bool holds = false;
    unsigned long intervals = 0;      // |points| + 1 complementary intervals
    unsigned long max_interval_count = 0;
    std::size_t reduced_k = 0;
};

/// Checks that every open interval complementary to the distinguished
/// point set carries at most reduced_k - 1 distinct roots of the expanded
/// instance. Exact: isolating intervals are refined until they separate
/// the point set from the instance roots. Requires a nonzero expansion.
HeartOutcome interval_bound_heart(const SpsInstance& inst,
                                  const ExpansionBudget& budget = {});

struct GapReport {
    Integer lhs;  // exact distinct real roots of the expansion
    Integer rhs;  // reduced_k - 1 + sum of prefix Wronskian root counts
    bool holds = false;
    std::size_t reduced_k = 0;
};

/// Numeric probe of the conjectured additive bound: reports both sides and
/// whether lhs <= rhs held. Requires a nonzero expansion.
GapReport open_problem_gap(const SpsInstance& inst,
                           const ExpansionBudget& budget = {});

}  // namespace wronsk
