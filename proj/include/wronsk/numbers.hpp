#pragma once

#include <gmpxx.h>

#include <string>

namespace wronsk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (base 10, optional sign) into canonical form.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& n);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Integer& n);
int sign(const Rational& q);

/// base^exp with arbitrary-precision exponent. Negative exponents invert,
/// so the base must be nonzero for them. Exponents that do not fit a
/// machine word are supported only for bases 0, 1 and -1; anything else
/// would not be representable and raises budget_error.
Rational pow_rational(const Rational& base, const Integer& exp);

Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

/// Least z >= 0 with z*z >= q. Exact; never rounds below the true square
/// root. Throws std::invalid_argument for negative q.
Integer ceil_sqrt(const Rational& q);

Integer binomial(const Integer& n, unsigned long k);
Integer factorial(unsigned long n);

/// A rational strictly above Euler's number, accurate to 16 decimal
/// places. Root bounds evaluated with it always over-approximate.
const Rational& euler_upper_bound();

}  // namespace wronsk
