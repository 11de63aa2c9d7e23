#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wronsk/numbers.hpp"

namespace wronsk {

/**
 * Univariate polynomial over the rationals, stored sparsely as terms with
 * strictly increasing exponents and no zero coefficients. Exponents are
 * arbitrary-precision nonnegative integers, so power products with very
 * large powers are representable without expansion tricks.
 */
class SparsePoly {
public:
    struct Term {
        Integer exponent;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    /// The zero polynomial.
    SparsePoly() = default;

    static SparsePoly constant(const Rational& c);
    static SparsePoly variable();  // x
    static SparsePoly monomial(const Rational& c, const Integer& exponent);

    /// Builds from terms in any order; duplicates are merged and zero
    /// coefficients dropped. Negative exponents are rejected.
    static SparsePoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.back().exponent == 0; }

    /// Degree of a nonzero polynomial. The zero polynomial has no degree
    /// (conventionally minus infinity); asking for it throws.
    const Integer& degree() const;

    std::size_t sparsity() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Rational& leading_coeff() const;  // throws on zero
    Rational coeff_at(const Integer& exponent) const;

    bool operator==(const SparsePoly&) const = default;

    /// Canonical text form: "c*x^e" terms joined by " + " in increasing
    /// exponent order; the zero polynomial prints as "0*x^0".
    std::string to_string() const;

private:
    std::vector<Term> terms_;  // strictly increasing exponents
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const Rational& c, const SparsePoly& p);

/// Product of a sequence of polynomials; the empty product is 1.
SparsePoly product(const std::vector<SparsePoly>& factors);

/// p^e for e >= 0. Monomials are powered symbolically, so arbitrarily
/// large exponents are fine for them; for anything else the exponent must
/// fit a machine word (the result would be astronomically dense).
SparsePoly pow(const SparsePoly& p, const Integer& e);

/// order-th derivative: each term picks up a falling-factorial factor and
/// terms of exponent < order vanish.
SparsePoly derivative(const SparsePoly& p, unsigned long order = 1);

Rational eval(const SparsePoly& p, const Rational& x);

/// Exact value p(n) at an integer point.
Rational eval_at_integer(const SparsePoly& p, const Integer& n);

/// Quotient and remainder with deg rem < deg divisor. Divisor nonzero.
std::pair<SparsePoly, SparsePoly> divmod(const SparsePoly& p, const SparsePoly& divisor);

/// Exact quotient; throws std::invalid_argument if the division leaves a
/// remainder.
SparsePoly div_exact(const SparsePoly& p, const SparsePoly& divisor);

/// p scaled by the inverse of its (positive) content: integer coefficients
/// with gcd 1, sign of the leading coefficient preserved. Zero maps to zero.
SparsePoly primitive_part(const SparsePoly& p);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) throws.
SparsePoly gcd(const SparsePoly& a, const SparsePoly& b);

/// Product of the distinct irreducible factors, p / gcd(p, p'), primitive
/// with positive leading coefficient. Shares exactly the roots of p, each
/// with multiplicity one. Throws std::invalid_argument("undefined radical")
/// on the zero polynomial.
SparsePoly squarefree_part(const SparsePoly& p);

/// Number of sign changes in the coefficient sequence read by increasing
/// exponent. By Descartes' rule of signs this bounds the number of
/// distinct positive real roots; it is at most sparsity - 1. Throws on the
/// zero polynomial.
std::size_t descartes_positive_bound(const SparsePoly& p);

}  // namespace wronsk
