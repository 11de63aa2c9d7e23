#include "wronsk/power_derivative.hpp"

#include <algorithm>
#include <stdexcept>

namespace wronsk {

namespace {

void trim(Partition& s) {
    while (!s.empty() && s.back() == 0) s.pop_back();
}

}  // namespace

unsigned long partition_weight(const Partition& s) {
    unsigned long w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) w += (i + 1) * s[i];
    return w;
}

unsigned long partition_size(const Partition& s) {
    unsigned long n = 0;
    for (unsigned long v : s) n += v;
    return n;
}

std::vector<Partition> enumerate_partitions(unsigned long p) {
    std::vector<Partition> out;
    Partition current;
    // Parts chosen largest-first; current[i] counts parts of size i + 1.
    auto rec = [&](auto&& self, unsigned long remaining, unsigned long max_part) -> void {
        if (remaining == 0) {
            Partition s = current;
            trim(s);
            out.push_back(std::move(s));
            return;
        }
        for (unsigned long part = std::min(remaining, max_part); part >= 1; --part) {
            if (current.size() < part) current.resize(part, 0);
            ++current[part - 1];
            self(self, remaining - part, part);
            --current[part - 1];
        }
    };
    rec(rec, p, p == 0 ? 1 : p);
    std::sort(out.begin(), out.end());
    return out;
}

PowerDerivativeTable::PowerDerivativeTable(const Integer& alpha, unsigned long max_order)
    : alpha_(alpha) {
    if (alpha < static_cast<long>(max_order))
        throw std::invalid_argument("power derivative table needs alpha >= max order");
    levels_.resize(max_order + 1);
    levels_[0][Partition{}] = 1;
    for (unsigned long q = 1; q <= max_order; ++q) {
        for (const auto& [s, c] : levels_[q - 1]) {
            // Differentiate the power factor f^(alpha - |s|).
            Integer spend = c * (alpha_ - static_cast<long>(partition_size(s)));
            if (spend != 0) {
                Partition s1 = s;
                if (s1.empty()) s1.resize(1, 0);
                ++s1[0];
                levels_[q][s1] += spend;
            }
            // Differentiate one of the derivative factors (f^(j))^(s_j).
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == 0) continue;
                Partition s2 = s;
                --s2[i];
                if (s2.size() < i + 2) s2.resize(i + 2, 0);
                ++s2[i + 1];
                trim(s2);
                levels_[q][s2] += c * Integer(s[i]);
            }
        }
    }
}

const std::map<Partition, Integer>& PowerDerivativeTable::level(unsigned long order) const {
    if (order >= levels_.size())
        throw std::out_of_range("derivative order beyond the table");
    return levels_[order];
}

const Integer& PowerDerivativeTable::coefficient(unsigned long order,
                                                 const Partition& s) const {
    const auto& lvl = level(order);
    auto it = lvl.find(s);
    if (it == lvl.end())
        throw std::out_of_range("no such partition at this order");
    return it->second;
}

SparsePoly power_derivative(const SparsePoly& f, const Integer& alpha,
                            unsigned long order) {
    if (alpha < static_cast<long>(order))
        throw std::invalid_argument("power derivative needs alpha >= order");
    PowerDerivativeTable table(alpha, order);
    std::map<Integer, SparsePoly> f_powers;  // cache of f^e
    auto f_power = [&](const Integer& e) -> const SparsePoly& {
        auto it = f_powers.find(e);
        if (it == f_powers.end()) it = f_powers.emplace(e, pow(f, e)).first;
        return it->second;
    };
    std::vector<SparsePoly> f_derivs(order + 1);  // f_derivs[k] = f^(k)
    f_derivs[0] = f;
    for (unsigned long k = 1; k <= order; ++k) f_derivs[k] = derivative(f_derivs[k - 1]);

    SparsePoly out;
    for (const auto& [s, c] : table.level(order)) {
        SparsePoly term = SparsePoly::constant(Rational(c));
        term = term * f_power(alpha - static_cast<long>(partition_size(s)));
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != 0) term = term * pow(f_derivs[i + 1], Integer(s[i]));
        out = out + term;
    }
    return out;
}

}  // namespace wronsk
