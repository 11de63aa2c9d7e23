#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wronsk/sparse_poly.hpp"

namespace wronsk {

/// Interval with rational endpoints; an absent endpoint means the
/// corresponding infinity (and is necessarily open).
struct RationalInterval {
    std::optional<Rational> lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;

    static RationalInterval whole() { return {}; }
    static RationalInterval open(const Rational& lo, const Rational& hi);
    static RationalInterval closed(const Rational& lo, const Rational& hi);
    static RationalInterval point(const Rational& x);
    static RationalInterval left_of(const Rational& hi, bool closed);
    static RationalInterval right_of(const Rational& lo, bool closed);

    /// Throws std::invalid_argument unless lo < hi, or lo == hi with both
    /// ends closed (a point).
    void validate() const;

    bool is_point() const;
    std::string to_string() const;
};

/**
 * Exact real-root queries for one polynomial, backed by a Sturm chain of
 * its squarefree part. All root counts are counts of distinct real roots;
 * multiplicities never enter. The zero polynomial vanishes everywhere and
 * is rejected with std::invalid_argument("infinitely many roots").
 */
class RootIsolator {
public:
    explicit RootIsolator(const SparsePoly& p);

    /// The squarefree part the chain is built on.
    const SparsePoly& radical() const { return radical_; }

    unsigned long count_all() const;
    unsigned long count(const RationalInterval& iv) const;

    /// One open interval per real root: pairwise disjoint, sorted, each
    /// containing exactly one root, and no endpoint is itself a root.
    /// Deterministic for a given polynomial.
    std::vector<RationalInterval> isolate() const;

    /// Halves the width of an interval produced by isolate() (or by an
    /// earlier refine), keeping its single root strictly inside and its
    /// endpoints off the roots.
    RationalInterval refine(const RationalInterval& iv) const;

private:
    unsigned long count_half_open(const std::optional<Rational>& lo,
                                  const std::optional<Rational>& hi) const;
    int variations_at(const std::optional<Rational>& x, int at_infinity) const;
    bool is_root(const Rational& x) const;
    void isolate_into(const Rational& lo, const Rational& hi, unsigned long roots,
                      std::vector<RationalInterval>& out) const;

    SparsePoly radical_;
    std::vector<SparsePoly> chain_;
};

unsigned long count_real_roots(const SparsePoly& p);
unsigned long count_roots_in(const SparsePoly& p, const RationalInterval& iv);
std::vector<RationalInterval> isolate_roots(const SparsePoly& p);

}  // namespace wronsk
