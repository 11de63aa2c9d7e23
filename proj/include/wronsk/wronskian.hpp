#pragma once

#include <cstddef>
#include <vector>

#include "wronsk/budget.hpp"
#include "wronsk/power_derivative.hpp"
#include "wronsk/sparse_poly.hpp"

namespace wronsk {

/// Exponent row over a shared base list: encodes prod_j f_j^(e[j]).
using PowerProduct = std::vector<Integer>;

/// Determinant of the k x k matrix with entry (i, j) = (d/dx)^i fs[j],
/// computed by expanding every derivative. Reference implementation; cost
/// grows with k! so keep k small.
SparsePoly wronskian_direct(const std::vector<SparsePoly>& fs);

/// Determinant by permutation expansion of a square polynomial matrix.
SparsePoly poly_determinant(const std::vector<std::vector<SparsePoly>>& m);

/**
 * Wronskian of the first `prefix` shifted power products
 *
 *   g_i = prod_j f_j^(e_i[j] + shift),   shift = prefix,
 *
 * held in factored form  prod_j f_j^(power_exponents[j]) * det_t  without
 * ever expanding a g_i. Rows and columns of the derivative matrix share
 * large powers of the f_j; what remains is a small matrix whose entries
 * combine base derivatives with power-derivative coefficients, and det_t
 * is its determinant. det_t is identically zero exactly when the products
 * are linearly dependent.
 */
struct FactoredWronskian {
    std::vector<Integer> power_exponents;
    SparsePoly det_t;
    unsigned long shift = 0;

    /// prod_j bases[j]^(power_exponents[j]) * det_t, expanded. Throws
    /// budget_error when the result would exceed the degree budget.
    SparsePoly reconstruct(const std::vector<SparsePoly>& bases,
                           const ExpansionBudget& budget = {}) const;
};

/// Throws std::invalid_argument("degenerate base") when some base is the
/// zero polynomial, and on malformed rows or negative exponents.
FactoredWronskian factored_wronskian(const std::vector<SparsePoly>& bases,
                                     const std::vector<PowerProduct>& products,
                                     std::size_t prefix);

/// Wronskian of the unshifted products prod_j f_j^(e_i[j]), recovered from
/// the factored form by exact division. The result is expanded, so the
/// unshifted exponent sums must stay within the degree budget.
SparsePoly power_product_wronskian(const std::vector<SparsePoly>& bases,
                                   const std::vector<PowerProduct>& products,
                                   std::size_t prefix,
                                   const ExpansionBudget& budget = {});

/// Verifies W(g*f_1, ..., g*f_k) == g^k * W(f_1, ..., f_k) by expansion.
bool scaling_check(const SparsePoly& g, const std::vector<SparsePoly>& fs);

/// Leading coefficient of the Wronskian of the unshifted products, read
/// off the factored form without expansion: leading coefficients multiply
/// through products and exact quotients. Exactly 0 iff the products are
/// linearly dependent.
Rational wronskian_leading_coefficient(const std::vector<SparsePoly>& bases,
                                       const std::vector<PowerProduct>& products);

/// Greedy maximal linearly independent subfamily, scanning the products in
/// order and keeping those independent of everything kept so far. Returned
/// indices are increasing.
std::vector<std::size_t> independent_subfamily(const std::vector<SparsePoly>& bases,
                                               const std::vector<PowerProduct>& products);

/**
 * Verifies the rational-function recurrence that peels one function off a
 * sum: with W_i the Wronskian of fs[0..i) and W_0 = 1,
 *
 *   R_0 = f_1 + ... + f_k,   R_{i+1} = (W_{i+1}^2 / W_i) * (R_i / W_{i+1})'
 *
 * must end with R_{k-1} == W_k. All arithmetic is exact on reduced
 * numerator/denominator pairs. Throws std::invalid_argument("dependent
 * prefix") when some prefix Wronskian is identically zero.
 */
bool frobenius_check(const std::vector<SparsePoly>& fs);

}  // namespace wronsk
