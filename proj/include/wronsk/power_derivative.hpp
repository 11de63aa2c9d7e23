#pragma once

#include <map>
#include <vector>

#include "wronsk/sparse_poly.hpp"

namespace wronsk {

/**
 * Integer partition in multiplicity encoding: s[i] counts parts equal to
 * i + 1, so the partitioned integer is sum (i + 1) * s[i]. Trailing zeros
 * are trimmed; the empty vector is the (only) partition of 0.
 */
using Partition = std::vector<unsigned long>;

/// sum (i + 1) * s[i]: the integer the vector partitions.
unsigned long partition_weight(const Partition& s);

/// sum s[i]: the number of parts, written |s|.
unsigned long partition_size(const Partition& s);

/// All partitions of p in multiplicity encoding, lexicographically sorted.
/// Their number is at most 2^(p-1) for p >= 1.
std::vector<Partition> enumerate_partitions(unsigned long p);

/**
 * Coefficient table for derivatives of powers: for every order q up to
 * max_order it holds integers c(alpha, s), s a partition of q, with
 *
 *   (f^alpha)^(q) = sum over partitions s of q of
 *                   c(alpha, s) * f^(alpha - |s|) * prod_k (f^(k))^(s_k).
 *
 * Built level by level by differentiating once more: each monomial either
 * spends another copy of f (append a part of size 1, factor alpha - |s|)
 * or deepens one existing derivative factor (a part of size j becomes
 * j + 1, factor s_j). Requires alpha >= max_order so the exponents
 * alpha - |s| stay nonnegative; all entries then satisfy
 * 0 <= c(alpha, s) <= (q^2 + alpha)^q.
 */
class PowerDerivativeTable {
public:
    PowerDerivativeTable(const Integer& alpha, unsigned long max_order);

    const Integer& alpha() const { return alpha_; }
    unsigned long max_order() const { return levels_.size() - 1; }

    const std::map<Partition, Integer>& level(unsigned long order) const;
    const Integer& coefficient(unsigned long order, const Partition& s) const;

private:
    Integer alpha_;
    std::vector<std::map<Partition, Integer>> levels_;
};

/**
 * Fully expanded order-th derivative of f^alpha, assembled from the
 * coefficient table rather than by expanding f^alpha first. Requires
 * alpha >= order.
 */
SparsePoly power_derivative(const SparsePoly& f, const Integer& alpha,
                            unsigned long order);

}  // namespace wronsk
