#include "wronsk/numbers.hpp"

#include <cctype>
#include <stdexcept>

#include "wronsk/errors.hpp"

namespace wronsk {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.erase(body.begin());
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: " + text);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Integer& n) { return sgn(n); }
int sign(const Rational& q) { return sgn(q); }

Rational pow_rational(const Rational& base, const Integer& exp) {
    if (exp == 0) return 1;
    if (base == 0) {
        if (exp < 0) throw std::invalid_argument("zero base with negative exponent");
        return 0;
    }
    if (base == 1) return 1;
    if (base == -1) return mpz_odd_p(exp.get_mpz_t()) ? -1 : 1;

    Integer mag = abs(exp);
    if (!mag.fits_ulong_p())
        throw budget_error("exponent too large for exact evaluation");
    unsigned long e = mag.get_ui();
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    out.canonicalize();
    if (exp < 0) out = 1 / out;
    return out;
}

Integer floor_rational(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

Integer ceil_rational(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

Integer ceil_sqrt(const Rational& q) {
    if (q < 0) throw std::invalid_argument("square root of a negative value");
    if (q == 0) return 0;
    Integer z;
    mpz_sqrt(z.get_mpz_t(), floor_rational(q).get_mpz_t());
    while (z * z < q) ++z;
    return z;
}

Integer binomial(const Integer& n, unsigned long k) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

const Rational& euler_upper_bound() {
    static const Rational e_hi = [] {
        Rational q(Integer("27182818284590453"), Integer("10000000000000000"));
        q.canonicalize();
        return q;
    }();
    return e_hi;
}

}  // namespace wronsk
