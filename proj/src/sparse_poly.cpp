#include "wronsk/sparse_poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wronsk/errors.hpp"

namespace wronsk {

SparsePoly SparsePoly::constant(const Rational& c) { return monomial(c, 0); }

SparsePoly SparsePoly::variable() { return monomial(1, 1); }

SparsePoly SparsePoly::monomial(const Rational& c, const Integer& exponent) {
    return from_terms({Term{exponent, c}});
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
    std::map<Integer, Rational> acc;
    for (auto& t : terms) {
        if (t.exponent < 0) throw std::invalid_argument("negative exponent");
        if (t.coeff == 0) continue;
        acc[t.exponent] += t.coeff;
    }
    SparsePoly out;
    for (auto& [e, c] : acc)
        if (c != 0) out.terms_.push_back(Term{e, c});
    return out;
}

const Integer& SparsePoly::degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
    return terms_.back().exponent;
}

const Rational& SparsePoly::leading_coeff() const {
    if (terms_.empty())
        throw std::invalid_argument("leading coefficient of the zero polynomial");
    return terms_.back().coeff;
}

Rational SparsePoly::coeff_at(const Integer& exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](const Term& t, const Integer& e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coeff;
    return 0;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0*x^0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << wronsk::to_string(terms_[i].coeff) << "*x^"
           << wronsk::to_string(terms_[i].exponent);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) {
    return os << p.to_string();
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    std::vector<SparsePoly::Term> merged;
    merged.reserve(a.sparsity() + b.sparsity());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->exponent < ib->exponent)) {
            merged.push_back(*ia++);
        } else if (ia == ea || ib->exponent < ia->exponent) {
            merged.push_back(*ib++);
        } else {
            Rational c = ia->coeff + ib->coeff;
            if (c != 0) merged.push_back({ia->exponent, c});
            ++ia;
            ++ib;
        }
    }
    return SparsePoly::from_terms(std::move(merged));
}

SparsePoly operator-(const SparsePoly& a) {
    std::vector<SparsePoly::Term> terms = a.terms();
    for (auto& t : terms) t.coeff = -t.coeff;
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    std::map<Integer, Rational> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) acc[ta.exponent + tb.exponent] += ta.coeff * tb.coeff;
    std::vector<SparsePoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) terms.push_back({e, c});
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
    std::vector<SparsePoly::Term> terms = p.terms();
    for (auto& t : terms) t.coeff *= c;
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly product(const std::vector<SparsePoly>& factors) {
    SparsePoly out = SparsePoly::constant(1);
    for (const auto& f : factors) out = out * f;
    return out;
}

SparsePoly pow(const SparsePoly& p, const Integer& e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    if (e == 0) return SparsePoly::constant(1);
    if (p.is_zero()) return SparsePoly();
    if (p.sparsity() == 1) {
        const auto& t = p.terms().front();
        return SparsePoly::monomial(pow_rational(t.coeff, e), t.exponent * e);
    }
    if (!e.fits_ulong_p()) throw budget_error("polynomial power too large to expand");
    unsigned long n = e.get_ui();
    SparsePoly base = p, out = SparsePoly::constant(1);
    while (n) {
        if (n & 1UL) out = out * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return out;
}

SparsePoly derivative(const SparsePoly& p, unsigned long order) {
    if (order == 0) return p;
    std::vector<SparsePoly::Term> terms;
    for (const auto& t : p.terms()) {
        if (t.exponent < static_cast<long>(order)) continue;
        Rational c = t.coeff;
        for (unsigned long i = 0; i < order; ++i) c *= t.exponent - static_cast<long>(i);
        terms.push_back({t.exponent - static_cast<long>(order), c});
    }
    return SparsePoly::from_terms(std::move(terms));
}

Rational eval(const SparsePoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    // Horner over the gaps, highest exponent first.
    Rational acc = 0;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it == terms.rbegin()) {
            acc = it->coeff;
        } else {
            Integer gap = std::prev(it)->exponent - it->exponent;
            acc = acc * pow_rational(x, gap) + it->coeff;
        }
    }
    acc = acc * pow_rational(x, terms.front().exponent);
    return acc;
}

Rational eval_at_integer(const SparsePoly& p, const Integer& n) {
    return eval(p, Rational(n));
}

std::pair<SparsePoly, SparsePoly> divmod(const SparsePoly& p, const SparsePoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    SparsePoly quot, rem = p;
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        SparsePoly t = SparsePoly::monomial(rem.leading_coeff() / divisor.leading_coeff(),
                                            rem.degree() - divisor.degree());
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return {quot, rem};
}

SparsePoly div_exact(const SparsePoly& p, const SparsePoly& divisor) {
    auto [quot, rem] = divmod(p, divisor);
    if (!rem.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return quot;
}

SparsePoly primitive_part(const SparsePoly& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        num_gcd = g;
        Integer l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        den_lcm = l;
    }
    Rational content(num_gcd, den_lcm);  // positive: gcd and lcm both are
    content.canonicalize();
    return (1 / content) * p;
}

SparsePoly gcd(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    SparsePoly r0 = primitive_part(a), r1 = primitive_part(b);
    while (!r1.is_zero()) {
        SparsePoly r2 = divmod(r0, r1).second;
        r0 = r1;
        r1 = primitive_part(r2);
    }
    if (sign(r0.leading_coeff()) < 0) r0 = Rational(-1) * r0;
    return r0;
}

SparsePoly squarefree_part(const SparsePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("undefined radical");
    if (p.is_constant()) return SparsePoly::constant(1);
    SparsePoly g = gcd(p, derivative(p));
    SparsePoly sf = primitive_part(div_exact(p, g));
    if (sign(sf.leading_coeff()) < 0) sf = Rational(-1) * sf;
    return sf;
}

std::size_t descartes_positive_bound(const SparsePoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("sign changes of the zero polynomial");
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& t : p.terms()) {
        int s = sign(t.coeff);
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace wronsk
