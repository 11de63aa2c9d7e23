#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wronsk/instance.hpp"

namespace wronsk {

enum class PitModel { sparse, dense };

/// One dependent power product written over the basis:
///   product(term) == sum_q coeffs[q] * product(basis[q]).
struct PitDependency {
    std::size_t term = 0;           // index into the instance's terms
    std::vector<Rational> coeffs;   // one per basis entry, in basis order
};

struct PitVerdict {
    bool is_zero = false;

    /// Blackbox: smallest positive integer where the instance evaluates
    /// to something nonzero.
    std::optional<Integer> witness;

    /// Whitebox: term indices of the greedy independent basis, the
    /// accumulated coefficient of each basis product in the full sum, and
    /// the dependency record for every non-basis product.
    std::vector<std::size_t> basis;
    std::vector<Rational> basis_coeffs;
    std::vector<PitDependency> certificate;

    /// Blackbox: evaluations performed. Whitebox: leading-coefficient
    /// tests performed.
    unsigned long query_count = 0;

    /// Blackbox: the a-priori root bound sizing the query set.
    Integer bound_used;
};

/// Value of the instance at a rational point, term by term, without ever
/// expanding: each base is evaluated and raised by fast exponentiation.
Rational evaluate_instance(const SpsInstance& inst, const Rational& x);

/// Evaluates at 1, 2, ..., B+1 where B is the a-priori bound of the chosen
/// model; a nonzero instance has at most B real roots, so it must show a
/// nonzero value. Short-circuits at the first witness. Throws budget_error
/// when more than max_queries evaluations would be needed.
PitVerdict pit_blackbox(const SpsInstance& inst, PitModel model,
                        unsigned long max_queries = 1000000);

/// Scans the power products in term order, keeping a linearly independent
/// basis: a candidate is independent exactly when the Wronskian leading
/// coefficient of basis + candidate is nonzero, and a dependent candidate
/// is written over the basis through ratios of Wronskian leading
/// coefficients. Zero-coefficient terms are dropped and duplicate exponent
/// rows merged first. The sum is zero iff every accumulated basis
/// coefficient is zero. Throws budget_error when the basis would exceed
/// basis_cap entries.
PitVerdict pit_whitebox(const SpsInstance& inst, std::size_t basis_cap = 5);

/// Independent re-check of a whitebox verdict: every dependency and the
/// final basis decomposition are verified as polynomial identities by
/// evaluating difference instances at enough integer points (the dense
/// count). Returns false on any mismatch.
bool certificate_check(const SpsInstance& inst, const PitVerdict& verdict);

}  // namespace wronsk
