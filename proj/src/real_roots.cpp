#include "wronsk/real_roots.hpp"

#include <sstream>
#include <stdexcept>

namespace wronsk {

RationalInterval RationalInterval::open(const Rational& lo, const Rational& hi) {
    RationalInterval iv;
    iv.lo = lo;
    iv.hi = hi;
    iv.validate();
    return iv;
}

RationalInterval RationalInterval::closed(const Rational& lo, const Rational& hi) {
    RationalInterval iv;
    iv.lo = lo;
    iv.hi = hi;
    iv.lo_closed = iv.hi_closed = true;
    iv.validate();
    return iv;
}

RationalInterval RationalInterval::point(const Rational& x) { return closed(x, x); }

RationalInterval RationalInterval::left_of(const Rational& hi, bool closed) {
    RationalInterval iv;
    iv.hi = hi;
    iv.hi_closed = closed;
    return iv;
}

RationalInterval RationalInterval::right_of(const Rational& lo, bool closed) {
    RationalInterval iv;
    iv.lo = lo;
    iv.lo_closed = closed;
    return iv;
}

void RationalInterval::validate() const {
    if (!lo || !hi) return;
    if (*lo < *hi) return;
    if (*lo == *hi && lo_closed && hi_closed) return;
    throw std::invalid_argument("empty interval");
}

bool RationalInterval::is_point() const {
    return lo && hi && *lo == *hi && lo_closed && hi_closed;
}

std::string RationalInterval::to_string() const {
    std::ostringstream os;
    os << (lo_closed ? '[' : '(') << (lo ? wronsk::to_string(*lo) : "-inf") << ", "
       << (hi ? wronsk::to_string(*hi) : "inf") << (hi_closed ? ']' : ')');
    return os.str();
}

RootIsolator::RootIsolator(const SparsePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("infinitely many roots");
    radical_ = squarefree_part(p);
    chain_.push_back(radical_);
    if (!radical_.is_constant()) {
        chain_.push_back(primitive_part(derivative(radical_)));
        while (!chain_.back().is_constant()) {
            const SparsePoly& a = chain_[chain_.size() - 2];
            const SparsePoly& b = chain_.back();
            SparsePoly rem = divmod(a, b).second;
            if (rem.is_zero()) break;  // cannot happen for a squarefree head
            // Scale only by positive constants: sign patterns must survive.
            chain_.push_back(primitive_part(Rational(-1) * rem));
        }
    }
}

bool RootIsolator::is_root(const Rational& x) const {
    return eval(radical_, x) == 0;
}

int RootIsolator::variations_at(const std::optional<Rational>& x,
                                int at_infinity) const {
    int variations = 0, prev = 0;
    for (const auto& p : chain_) {
        int s;
        if (x) {
            s = sign(eval(p, *x));
        } else if (p.is_constant()) {
            s = sign(p.leading_coeff());
        } else {
            s = sign(p.leading_coeff());
            if (at_infinity < 0 && mpz_odd_p(p.degree().get_mpz_t())) s = -s;
        }
        if (s != 0 && prev != 0 && s != prev) ++variations;
        if (s != 0) prev = s;
    }
    return variations;
}

/// Distinct roots in (lo, hi]; an absent bound is the matching infinity.
unsigned long RootIsolator::count_half_open(const std::optional<Rational>& lo,
                                            const std::optional<Rational>& hi) const {
    int vlo = variations_at(lo, -1);
    int vhi = variations_at(hi, +1);
    return static_cast<unsigned long>(vlo - vhi);
}

unsigned long RootIsolator::count_all() const {
    return count_half_open(std::nullopt, std::nullopt);
}

unsigned long RootIsolator::count(const RationalInterval& iv) const {
    iv.validate();
    if (iv.is_point()) return is_root(*iv.lo) ? 1 : 0;
    unsigned long n = count_half_open(iv.lo, iv.hi);
    if (iv.hi && !iv.hi_closed && is_root(*iv.hi)) --n;
    if (iv.lo && iv.lo_closed && is_root(*iv.lo)) ++n;
    return n;
}

namespace {

/// 1 + max |c_i / lc|: every real root has absolute value strictly below.
Rational cauchy_bound(const SparsePoly& p) {
    Rational best = 0;
    const Rational& lc = p.leading_coeff();
    for (const auto& t : p.terms()) {
        Rational ratio = abs(t.coeff / lc);
        if (ratio > best) best = ratio;
    }
    return best + 1;
}

}  // namespace

/// Splits (lo, hi], known to hold `roots` roots and to have non-root
/// endpoints, until single roots sit in open subintervals. Splits at
/// non-root points only, so every emitted endpoint is off the roots.
void RootIsolator::isolate_into(const Rational& lo, const Rational& hi,
                                unsigned long roots,
                                std::vector<RationalInterval>& out) const {
    if (roots == 0) return;
    if (roots == 1) {
        out.push_back(RationalInterval::open(lo, hi));
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (!is_root(mid)) {
        unsigned long left = count_half_open(lo, mid);
        isolate_into(lo, mid, left, out);
        isolate_into(mid, hi, roots - left, out);
        return;
    }
    // The midpoint is a rational root: carve a shrinking window around it
    // until the window holds that root alone and its edges are root-free.
    Rational w = (hi - lo) / 4;
    while (true) {
        if (!is_root(mid - w) && !is_root(mid + w) &&
            count_half_open(mid - w, mid + w) == 1) {
            unsigned long left = count_half_open(lo, mid - w);
            isolate_into(lo, mid - w, left, out);
            out.push_back(RationalInterval::open(mid - w, mid + w));
            isolate_into(mid + w, hi, roots - left - 1, out);
            return;
        }
        w /= 2;
    }
}

std::vector<RationalInterval> RootIsolator::isolate() const {
    std::vector<RationalInterval> out;
    if (radical_.is_constant()) return out;
    unsigned long total = count_all();
    if (total == 0) return out;
    Rational b = cauchy_bound(radical_);
    isolate_into(-b, b, total, out);
    return out;
}

RationalInterval RootIsolator::refine(const RationalInterval& iv) const {
    if (!iv.lo || !iv.hi || iv.lo_closed || iv.hi_closed)
        throw std::invalid_argument("refine expects a bounded open interval");
    if (count(iv) != 1)
        throw std::invalid_argument("refine expects an interval isolating one root");
    Rational lo = *iv.lo, hi = *iv.hi;
    Rational mid = (lo + hi) / 2;
    if (is_root(mid)) {
        // The root is the midpoint itself; recentre at half width.
        return RationalInterval::open((lo + mid) / 2, (mid + hi) / 2);
    }
    if (count_half_open(lo, mid) == 1) return RationalInterval::open(lo, mid);
    return RationalInterval::open(mid, hi);
}

unsigned long count_real_roots(const SparsePoly& p) {
    return RootIsolator(p).count_all();
}

unsigned long count_roots_in(const SparsePoly& p, const RationalInterval& iv) {
    return RootIsolator(p).count(iv);
}

std::vector<RationalInterval> isolate_roots(const SparsePoly& p) {
    return RootIsolator(p).isolate();
}

}  // namespace wronsk
