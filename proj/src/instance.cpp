#include "wronsk/instance.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rng.hpp"
#include "wronsk/errors.hpp"

namespace wronsk {

unsigned long SpsInstance::max_base_sparsity() const {
    std::size_t t = 1;
    for (const auto& f : bases) t = std::max(t, f.sparsity());
    return static_cast<unsigned long>(t);
}

Integer SpsInstance::max_base_degree() const {
    Integer d = 0;
    for (const auto& f : bases)
        if (!f.is_zero() && f.degree() > d) d = f.degree();
    return d;
}

Integer SpsInstance::expansion_degree_estimate() const {
    Integer best = 0;
    for (const auto& row : exponents) {
        Integer deg = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0 || bases[j].is_constant()) continue;
            deg += row[j] * bases[j].degree();
        }
        if (deg > best) best = deg;
    }
    return best;
}

void SpsInstance::validate() const {
    if (bases.empty()) throw std::invalid_argument("instance has no bases");
    if (coeffs.empty() || exponents.empty())
        throw std::invalid_argument("instance has no terms");
    if (coeffs.size() != exponents.size())
        throw std::invalid_argument("coefficient/exponent row count mismatch");
    for (const auto& row : exponents) {
        if (row.size() != bases.size())
            throw std::invalid_argument("exponent row width does not match base count");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 0) throw std::invalid_argument("negative exponent");
            if (row[j] > 0 && bases[j].is_zero())
                throw std::invalid_argument("zero base with positive exponent");
        }
    }
}

SparsePoly expand(const SpsInstance& inst, const ExpansionBudget& budget) {
    inst.validate();
    if (inst.expansion_degree_estimate() > budget.max_degree)
        throw budget_error("expansion too large");
    SparsePoly acc;
    for (std::size_t i = 0; i < inst.num_terms(); ++i) {
        SparsePoly term = SparsePoly::constant(inst.coeffs[i]);
        for (std::size_t j = 0; j < inst.num_bases(); ++j) {
            if (inst.exponents[i][j] == 0) continue;
            term = term * pow(inst.bases[j], inst.exponents[i][j]);
            if (term.sparsity() > budget.max_sparsity)
                throw budget_error("expansion too large");
        }
        acc = acc + term;
        if (acc.sparsity() > budget.max_sparsity)
            throw budget_error("expansion too large");
    }
    return acc;
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineReader {
public:
    explicit LineReader(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) lines_.push_back(line);
    }

    /// Next line with comments stripped and at least one token, or false.
    bool next(std::vector<Token>& tokens, std::size_t& line_no) {
        while (pos_ < lines_.size()) {
            std::string line = lines_[pos_++];
            if (auto hash = line.find('#'); hash != std::string::npos)
                line = line.substr(0, hash);
            tokens = tokenize(line);
            if (!tokens.empty()) {
                line_no = pos_;
                return true;
            }
        }
        return false;
    }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_coeff(const Token& tok, std::size_t line) {
    try {
        return parse_rational(tok.text);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed coefficient '" + tok.text + "'", line, tok.column);
    }
}

/// "c*x^e"; the exponent must be a plain nonnegative integer.
SparsePoly::Term parse_monomial(const Token& tok, std::size_t line) {
    auto star = tok.text.find("*x^");
    if (star == std::string::npos)
        throw parse_error("expected monomial 'c*x^e', got '" + tok.text + "'", line,
                          tok.column);
    std::string coeff_text = tok.text.substr(0, star);
    std::string exp_text = tok.text.substr(star + 3);
    Rational c;
    try {
        c = parse_rational(coeff_text);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed coefficient '" + coeff_text + "'", line, tok.column);
    }
    if (!all_digits(exp_text)) {
        if (!exp_text.empty() && exp_text[0] == '-')
            throw parse_error("negative exponent in '" + tok.text + "'", line, tok.column);
        throw parse_error("malformed exponent in '" + tok.text + "'", line, tok.column);
    }
    return {Integer(exp_text), c};
}

std::size_t parse_count(const std::vector<Token>& tokens, std::size_t line,
                        const std::string& keyword) {
    if (tokens.size() != 2 || tokens[0].text != keyword)
        throw parse_error("expected '" + keyword + " <count>'", line,
                          tokens.empty() ? 1 : tokens[0].column);
    if (!all_digits(tokens[1].text) || tokens[1].text == "0")
        throw parse_error("expected a positive count after '" + keyword + "'", line,
                          tokens[1].column);
    unsigned long n = 0;
    try {
        n = std::stoul(tokens[1].text);
    } catch (const std::exception&) {
        throw parse_error("count out of range", line, tokens[1].column);
    }
    return n;
}

}  // namespace

SpsInstance parse_instance(const std::string& text) {
    LineReader reader(text);
    std::vector<Token> tokens;
    std::size_t line = 0;

    if (!reader.next(tokens, line)) throw parse_error("empty instance", 1, 1);
    std::size_t m = parse_count(tokens, line, "bases");

    SpsInstance inst;
    for (std::size_t j = 1; j <= m; ++j) {
        if (!reader.next(tokens, line))
            throw parse_error("missing base line f" + std::to_string(j), line + 1, 1);
        std::string expected = "f" + std::to_string(j) + ":";
        if (tokens[0].text != expected)
            throw parse_error("expected '" + expected + "'", line, tokens[0].column);
        std::vector<SparsePoly::Term> terms;
        bool want_monomial = true;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (want_monomial) {
                terms.push_back(parse_monomial(tokens[i], line));
            } else if (tokens[i].text != "+") {
                throw parse_error("expected '+' between monomials", line,
                                  tokens[i].column);
            }
            want_monomial = !want_monomial;
        }
        if (terms.empty())
            throw parse_error("base without monomials", line,
                              tokens[0].column + expected.size());
        if (want_monomial)
            throw parse_error("dangling '+'", line, tokens.back().column);
        inst.bases.push_back(SparsePoly::from_terms(std::move(terms)));
    }

    if (!reader.next(tokens, line))
        throw parse_error("missing 'terms' header", line + 1, 1);
    std::size_t k = parse_count(tokens, line, "terms");

    for (std::size_t i = 0; i < k; ++i) {
        if (!reader.next(tokens, line))
            throw parse_error("missing term line", line + 1, 1);
        if (tokens.size() < 2 || tokens[1].text != ":")
            throw parse_error("expected '<coefficient> : [factors]'", line,
                              tokens[0].column);
        Rational a = parse_coeff(tokens[0], line);
        PowerProduct row(m, Integer(0));
        std::vector<bool> seen(m, false);
        for (std::size_t p = 2; p < tokens.size(); ++p) {
            const Token& tok = tokens[p];
            auto caret = tok.text.find('^');
            if (tok.text.size() < 2 || tok.text[0] != 'f' || caret == std::string::npos)
                throw parse_error("expected factor 'f<j>^<alpha>', got '" + tok.text + "'",
                                  line, tok.column);
            std::string idx_text = tok.text.substr(1, caret - 1);
            std::string exp_text = tok.text.substr(caret + 1);
            if (!all_digits(idx_text))
                throw parse_error("malformed base index in '" + tok.text + "'", line,
                                  tok.column);
            std::size_t j = std::stoul(idx_text);
            if (j < 1 || j > m)
                throw parse_error("unknown base f" + idx_text, line, tok.column);
            if (seen[j - 1])
                throw parse_error("base f" + idx_text + " repeated in one term", line,
                                  tok.column);
            if (!all_digits(exp_text)) {
                if (!exp_text.empty() && exp_text[0] == '-')
                    throw parse_error("negative exponent in '" + tok.text + "'", line,
                                      tok.column);
                throw parse_error("malformed exponent in '" + tok.text + "'", line,
                                  tok.column);
            }
            seen[j - 1] = true;
            row[j - 1] = Integer(exp_text);
            if (row[j - 1] > 0 && inst.bases[j - 1].is_zero())
                throw parse_error("zero base f" + idx_text + " with positive exponent",
                                  line, tok.column);
        }
        inst.coeffs.push_back(a);
        inst.exponents.push_back(std::move(row));
    }

    if (reader.next(tokens, line))
        throw parse_error("unexpected content after the last term", line,
                          tokens[0].column);
    inst.validate();
    return inst;
}

std::string serialize_instance(const SpsInstance& inst) {
    inst.validate();
    std::ostringstream os;
    os << "bases " << inst.num_bases() << "\n";
    for (std::size_t j = 0; j < inst.num_bases(); ++j)
        os << "f" << j + 1 << ": " << inst.bases[j].to_string() << "\n";
    os << "terms " << inst.num_terms() << "\n";
    for (std::size_t i = 0; i < inst.num_terms(); ++i) {
        os << to_string(inst.coeffs[i]) << " :";
        for (std::size_t j = 0; j < inst.num_bases(); ++j)
            if (inst.exponents[i][j] != 0)
                os << " f" << j + 1 << "^" << to_string(inst.exponents[i][j]);
        os << "\n";
    }
    return os.str();
}

namespace {

SparsePoly random_base(detail::Rng& rng, unsigned long t, unsigned long d,
                       unsigned long coeff_max) {
    unsigned long max_terms = std::min<unsigned long>(t, d + 1);
    unsigned long n = 1 + rng.below(max_terms);
    std::set<unsigned long> exps;
    while (exps.size() < n) exps.insert(rng.below(d + 1));
    std::vector<SparsePoly::Term> terms;
    for (unsigned long e : exps)
        terms.push_back({Integer(e), Rational(rng.signed_nonzero(coeff_max))});
    return SparsePoly::from_terms(std::move(terms));
}

PowerProduct random_row(detail::Rng& rng, std::size_t m, unsigned long alpha_max) {
    PowerProduct row(m);
    for (auto& e : row) e = Integer(rng.below(alpha_max + 1));
    return row;
}

}  // namespace

SpsInstance random_instance(const InstanceParams& params) {
    if (params.k == 0 || params.m == 0 || params.t == 0 || params.coeff_max == 0)
        throw std::invalid_argument("instance parameters must be positive");
    detail::Rng rng(params.seed);
    SpsInstance inst;
    for (std::size_t j = 0; j < params.m; ++j)
        inst.bases.push_back(random_base(rng, params.t, params.d, params.coeff_max));

    if (!params.force_zero) {
        for (std::size_t i = 0; i < params.k; ++i) {
            inst.coeffs.push_back(Rational(rng.signed_nonzero(params.coeff_max)));
            inst.exponents.push_back(random_row(rng, params.m, params.alpha_max));
        }
        return inst;
    }

    // Forced zero: every drawn term reappears negated, so the sum cancels
    // identically. Odd k spreads one cancellation over three copies.
    std::size_t pairs = params.k / 2;
    bool odd = params.k % 2 != 0;
    if (params.k == 1) {
        inst.coeffs.push_back(0);
        inst.exponents.push_back(random_row(rng, params.m, params.alpha_max));
        return inst;
    }
    for (std::size_t i = 0; i < pairs; ++i) {
        Rational a(rng.signed_nonzero(params.coeff_max));
        PowerProduct row = random_row(rng, params.m, params.alpha_max);
        if (odd && i == 0) {
            Rational b(rng.signed_nonzero(params.coeff_max));
            inst.coeffs.push_back(a);
            inst.exponents.push_back(row);
            inst.coeffs.push_back(b);
            inst.exponents.push_back(row);
            inst.coeffs.push_back(-a - b);
            inst.exponents.push_back(row);
        } else {
            inst.coeffs.push_back(a);
            inst.exponents.push_back(row);
            inst.coeffs.push_back(-a);
            inst.exponents.push_back(row);
        }
    }
    return inst;
}

OptimalInstance optimal_instance(unsigned long k, unsigned long p) {
    if (k < 2) throw std::invalid_argument("needs at least two terms");
    if (p < 1) throw std::invalid_argument("needs p >= 1");
    unsigned long w = 1 + (p + 2) / 2;  // 1 + ceil((p+1)/2)

    // Outer polynomial: x * prod_{i=1}^{k-1} (x^2 - i^2), k-sparse, odd
    // exponents 1, 3, ..., 2k-1, with simple roots -(k-1)..(k-1).
    SparsePoly outer = SparsePoly::variable();
    for (unsigned long i = 1; i < k; ++i) {
        SparsePoly factor =
            SparsePoly::from_terms({{Integer(2), Rational(1)},
                                    {Integer(0), Rational(-static_cast<long>(i * i))}});
        outer = outer * factor;
    }

    // Inner polynomial: k * prod_{i=1}^{w} (x - 2i).
    SparsePoly inner = SparsePoly::constant(Rational(static_cast<long>(k)));
    for (unsigned long i = 1; i <= w; ++i) {
        SparsePoly factor = SparsePoly::from_terms(
            {{Integer(1), Rational(1)}, {Integer(0), Rational(-2 * static_cast<long>(i))}});
        inner = inner * factor;
    }

    OptimalInstance out;
    out.instance.bases.push_back(inner);
    for (const auto& term : outer.terms()) {
        out.instance.coeffs.push_back(term.coeff);
        out.instance.exponents.push_back({term.exponent});
    }
    out.predicted_root_count = Integer(2 * k - 1) * Integer(w);
    out.predicted_upsilon = Integer(2 * w - 1);
    out.predicted_inner_roots = Integer(w);
    return out;
}

SpsInstance descartes_instance(std::size_t k, unsigned long alpha_max,
                               std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("needs at least one term");
    unsigned long spread = std::max<unsigned long>(alpha_max, k - 1);
    detail::Rng rng(seed);
    std::set<unsigned long> alphas;
    while (alphas.size() < k) alphas.insert(rng.below(spread + 1));
    SpsInstance inst;
    inst.bases.push_back(SparsePoly::variable());
    for (unsigned long a : alphas) {
        inst.coeffs.push_back(Rational(rng.signed_nonzero(5)));
        inst.exponents.push_back({Integer(a) + Integer(static_cast<unsigned long>(k))});
    }
    return inst;
}

}  // namespace wronsk
