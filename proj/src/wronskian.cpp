#include "wronsk/wronskian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wronsk/errors.hpp"

namespace wronsk {

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

void validate_family(const std::vector<SparsePoly>& bases,
                     const std::vector<PowerProduct>& products) {
    if (bases.empty()) throw std::invalid_argument("no bases");
    if (products.empty()) throw std::invalid_argument("no products");
    for (const auto& f : bases)
        if (f.is_zero()) throw std::invalid_argument("degenerate base");
    for (const auto& row : products) {
        if (row.size() != bases.size())
            throw std::invalid_argument("product row width does not match base count");
        for (const auto& e : row)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }
}

/// Per-base data reused across matrix cells.
struct BasePowers {
    std::vector<SparsePoly> derivs;       // f^(0) .. f^(s-1)
    std::vector<SparsePoly> small_pows;   // f^0 .. f^(s-1)
};

BasePowers base_powers(const SparsePoly& f, std::size_t s) {
    BasePowers bp;
    bp.derivs.resize(s);
    bp.small_pows.resize(s);
    bp.derivs[0] = f;
    bp.small_pows[0] = SparsePoly::constant(1);
    for (std::size_t i = 1; i < s; ++i) {
        bp.derivs[i] = derivative(bp.derivs[i - 1]);
        bp.small_pows[i] = bp.small_pows[i - 1] * f;
    }
    return bp;
}

/// sum over partitions s of r of c(alpha, s) * f^(v1 - |s|) * prod (f^(k))^(s_k),
/// with v1 = v - 1 >= r, the piece of (f^alpha)^(r) left after factoring
/// f^(alpha - v1) out of the matrix cell.
SparsePoly cell_factor(const PowerDerivativeTable& table, const BasePowers& bp,
                       unsigned long r, unsigned long v1) {
    SparsePoly out;
    for (const auto& [s, c] : table.level(r)) {
        SparsePoly term = SparsePoly::constant(Rational(c));
        term = term * bp.small_pows[v1 - partition_size(s)];
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != 0) term = term * pow(bp.derivs[i + 1], Integer(s[i]));
        out = out + term;
    }
    return out;
}

void compositions(unsigned long total, std::size_t parts,
                  std::vector<unsigned long>& current,
                  const std::function<void(const std::vector<unsigned long>&)>& emit) {
    if (current.size() + 1 == parts) {
        current.push_back(total);
        emit(current);
        current.pop_back();
        return;
    }
    for (unsigned long r = 0; r <= total; ++r) {
        current.push_back(r);
        compositions(total - r, parts, current, emit);
        current.pop_back();
    }
}

}  // namespace

SparsePoly poly_determinant(const std::vector<std::vector<SparsePoly>>& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("non-square matrix");
    if (n == 0) return SparsePoly::constant(1);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SparsePoly det;
    do {
        SparsePoly term = SparsePoly::constant(permutation_sign(perm));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
            term = term * m[i][perm[i]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

SparsePoly wronskian_direct(const std::vector<SparsePoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty family");
    std::size_t k = fs.size();
    std::vector<std::vector<SparsePoly>> m(k, std::vector<SparsePoly>(k));
    for (std::size_t j = 0; j < k; ++j) {
        m[0][j] = fs[j];
        for (std::size_t i = 1; i < k; ++i) m[i][j] = derivative(m[i - 1][j]);
    }
    return poly_determinant(m);
}

SparsePoly FactoredWronskian::reconstruct(const std::vector<SparsePoly>& bases,
                                          const ExpansionBudget& budget) const {
    if (bases.size() != power_exponents.size())
        throw std::invalid_argument("base count does not match the factored form");
    if (det_t.is_zero()) return SparsePoly();
    Integer estimate = det_t.degree();
    for (std::size_t j = 0; j < bases.size(); ++j)
        if (!bases[j].is_constant()) estimate += power_exponents[j] * bases[j].degree();
    if (estimate > budget.max_degree)
        throw budget_error("factored Wronskian too large to expand: degree " +
                           estimate.get_str());
    SparsePoly out = det_t;
    for (std::size_t j = 0; j < bases.size(); ++j)
        out = out * pow(bases[j], power_exponents[j]);
    return out;
}

FactoredWronskian factored_wronskian(const std::vector<SparsePoly>& bases,
                                     const std::vector<PowerProduct>& products,
                                     std::size_t prefix) {
    validate_family(bases, products);
    if (prefix == 0 || prefix > products.size())
        throw std::invalid_argument("prefix out of range");
    std::size_t s = prefix, m = bases.size();
    Integer shift(static_cast<unsigned long>(s));

    std::vector<BasePowers> bp;
    bp.reserve(m);
    for (const auto& f : bases) bp.push_back(base_powers(f, s));

    // tables[u][j]: coefficients for derivatives of f_j^(e_u[j] + shift).
    std::vector<std::vector<PowerDerivativeTable>> tables;
    tables.reserve(s);
    for (std::size_t u = 0; u < s; ++u) {
        std::vector<PowerDerivativeTable> row;
        row.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            row.emplace_back(products[u][j] + shift, s - 1);
        tables.push_back(std::move(row));
    }

    // Entry (u, v): the (v-1)-th derivative of g_u after the column factor
    // prod f_j^(e_u[j]) and the row factor prod f_j^(shift - v + 1) are
    // pulled out. The general Leibniz rule splits the derivative order
    // over the bases, with the usual multinomial multiplicities.
    std::vector<std::vector<SparsePoly>> t(s, std::vector<SparsePoly>(s));
    for (std::size_t v = 1; v <= s; ++v) {
        unsigned long v1 = static_cast<unsigned long>(v - 1);
        std::vector<Integer> fact(v1 + 1);
        for (unsigned long i = 0; i <= v1; ++i) fact[i] = factorial(i);
        for (std::size_t u = 0; u < s; ++u) {
            SparsePoly cell;
            std::vector<unsigned long> current;
            compositions(v1, m, current, [&](const std::vector<unsigned long>& r) {
                Integer multi = fact[v1];
                for (unsigned long rj : r) multi /= fact[rj];
                SparsePoly term = SparsePoly::constant(Rational(multi));
                for (std::size_t j = 0; j < m && !term.is_zero(); ++j)
                    term = term * cell_factor(tables[u][j], bp[j], r[j], v1);
                cell = cell + term;
            });
            t[u][v - 1] = cell;
        }
    }

    FactoredWronskian out;
    out.shift = static_cast<unsigned long>(s);
    // The matrix indexed (row = derivative order v, column = product u) is
    // the transpose of t; transposition does not change the determinant.
    out.det_t = poly_determinant(t);
    out.power_exponents.resize(m);
    Integer row_total = shift * Integer(static_cast<unsigned long>(s)) -
                        Integer(static_cast<unsigned long>(s * (s - 1) / 2));
    for (std::size_t j = 0; j < m; ++j) {
        Integer col_total = 0;
        for (std::size_t u = 0; u < s; ++u) col_total += products[u][j];
        out.power_exponents[j] = col_total + row_total;
    }
    return out;
}

SparsePoly power_product_wronskian(const std::vector<SparsePoly>& bases,
                                   const std::vector<PowerProduct>& products,
                                   std::size_t prefix,
                                   const ExpansionBudget& budget) {
    FactoredWronskian fw = factored_wronskian(bases, products, prefix);
    if (fw.det_t.is_zero()) return SparsePoly();
    // Dividing out the scaling factor prod f_j^(shift * prefix) leaves the
    // Wronskian of the unshifted products.
    Integer scale = Integer(fw.shift) * Integer(static_cast<unsigned long>(prefix));
    Integer estimate = fw.det_t.degree();
    for (std::size_t j = 0; j < bases.size(); ++j) {
        if (bases[j].is_constant()) continue;
        const Integer e = fw.power_exponents[j] - scale;
        if (e >= 0) estimate += e * bases[j].degree();
    }
    if (estimate > budget.max_degree)
        throw budget_error("power-product Wronskian too large to expand: degree " +
                           estimate.get_str());
    SparsePoly num = fw.det_t, den = SparsePoly::constant(1);
    for (std::size_t j = 0; j < bases.size(); ++j) {
        Integer e = fw.power_exponents[j] - scale;
        if (e >= 0)
            num = num * pow(bases[j], e);
        else
            den = den * pow(bases[j], -e);
    }
    return div_exact(num, den);
}

bool scaling_check(const SparsePoly& g, const std::vector<SparsePoly>& fs) {
    std::vector<SparsePoly> scaled;
    scaled.reserve(fs.size());
    for (const auto& f : fs) scaled.push_back(g * f);
    SparsePoly lhs = wronskian_direct(scaled);
    SparsePoly rhs = pow(g, Integer(static_cast<unsigned long>(fs.size()))) *
                     wronskian_direct(fs);
    return lhs == rhs;
}

Rational wronskian_leading_coefficient(const std::vector<SparsePoly>& bases,
                                       const std::vector<PowerProduct>& products) {
    FactoredWronskian fw = factored_wronskian(bases, products, products.size());
    if (fw.det_t.is_zero()) return 0;
    std::size_t s = products.size();
    Integer scale = Integer(fw.shift) * Integer(static_cast<unsigned long>(s));
    Rational lc = fw.det_t.leading_coeff();
    for (std::size_t j = 0; j < bases.size(); ++j)
        lc *= pow_rational(bases[j].leading_coeff(), fw.power_exponents[j] - scale);
    return lc;
}

std::vector<std::size_t> independent_subfamily(const std::vector<SparsePoly>& bases,
                                               const std::vector<PowerProduct>& products) {
    std::vector<std::size_t> kept;
    std::vector<PowerProduct> rows;
    for (std::size_t i = 0; i < products.size(); ++i) {
        rows.push_back(products[i]);
        if (wronskian_leading_coefficient(bases, rows) != 0) {
            kept.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    return kept;
}

namespace {

/// Reduced fraction of polynomials; the denominator is primitive with a
/// positive leading coefficient.
struct PolyFraction {
    SparsePoly num, den;

    static PolyFraction of(SparsePoly n, SparsePoly d) {
        if (d.is_zero()) throw std::invalid_argument("zero denominator");
        PolyFraction f{std::move(n), std::move(d)};
        f.reduce();
        return f;
    }

    void reduce() {
        if (num.is_zero()) {
            den = SparsePoly::constant(1);
            return;
        }
        SparsePoly g = gcd(num, den);
        num = div_exact(num, g);
        den = div_exact(den, g);
        SparsePoly prim = primitive_part(den);
        Rational scale = den.leading_coeff() / prim.leading_coeff();
        if (sign(prim.leading_coeff()) < 0) {
            prim = Rational(-1) * prim;
            scale = -scale;
        }
        den = prim;
        num = (1 / scale) * num;
    }

    PolyFraction derivative_() const {
        return of(wronsk::derivative(num) * den - num * wronsk::derivative(den),
                  den * den);
    }
};

}  // namespace

bool frobenius_check(const std::vector<SparsePoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty family");
    std::size_t k = fs.size();
    std::vector<SparsePoly> w(k + 1);  // w[i] = Wronskian of fs[0..i); w[0] = 1
    w[0] = SparsePoly::constant(1);
    for (std::size_t i = 1; i <= k; ++i) {
        w[i] = wronskian_direct({fs.begin(), fs.begin() + i});
        if (w[i].is_zero()) throw std::invalid_argument("dependent prefix");
    }
    SparsePoly sum;
    for (const auto& f : fs) sum = sum + f;
    PolyFraction r = PolyFraction::of(sum, SparsePoly::constant(1));
    // r_{i+1} = (w_{i+1}^2 / w_i) * (r_i / w_{i+1})'
    //         = (r_i' w_{i+1} - r_i w_{i+1}') / w_i.
    for (std::size_t i = 0; i + 1 < k; ++i) {
        PolyFraction dr = r.derivative_();
        SparsePoly num = dr.num * w[i + 1] * r.den - r.num * derivative(w[i + 1]) * dr.den;
        SparsePoly den = dr.den * r.den * w[i];
        r = PolyFraction::of(num, den);
    }
    // r must equal w[k] as a rational function.
    return r.num == w[k] * r.den;
}

}  // namespace wronsk
