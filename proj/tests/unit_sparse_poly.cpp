#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wronsk/sparse_poly.hpp"

using namespace wronsk;

namespace {

SparsePoly poly(std::vector<std::pair<long, long>> terms) {
    std::vector<SparsePoly::Term> t;
    for (const auto& [e, c] : terms) t.push_back({Integer(e), Rational(c)});
    return SparsePoly::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("construction merges duplicates and drops zero coefficients") {
    const SparsePoly p = poly({{2, 3}, {0, 1}, {2, -3}, {1, 4}});
    CHECK(p == poly({{0, 1}, {1, 4}}));
    CHECK(p.sparsity() == 2);
    CHECK(p.degree() == 1);
    CHECK(SparsePoly().is_zero());
    CHECK(SparsePoly::constant(0).is_zero());
    CHECK(SparsePoly::constant(7).is_constant());
    CHECK_FALSE(SparsePoly::variable().is_constant());
    CHECK_THROWS_AS(SparsePoly::monomial(Rational(1), Integer(-1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SparsePoly().degree(), std::invalid_argument);
    CHECK_THROWS_AS(SparsePoly().leading_coeff(), std::invalid_argument);
}

TEST_CASE("text form lists terms by increasing exponent") {
    CHECK(SparsePoly().to_string() == "0*x^0");
    CHECK(poly({{0, -2}, {3, 1}}).to_string() == "-2*x^0 + 1*x^3");
    CHECK(SparsePoly::monomial(Rational(1, 2), Integer(5)).to_string() == "1/2*x^5");
}

TEST_CASE("ring operations satisfy the usual identities") {
    const SparsePoly a = poly({{0, 1}, {1, 2}, {3, -1}});
    const SparsePoly b = poly({{1, 5}, {2, 1}});
    const SparsePoly c = poly({{0, -3}, {4, 2}});
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == SparsePoly());
    CHECK(-a + a == SparsePoly());
    CHECK(a * SparsePoly::constant(1) == a);
    CHECK(a * SparsePoly() == SparsePoly());
    CHECK(Rational(3) * a == a + a + a);
}

TEST_CASE("product and pow expand repeated multiplication") {
    const SparsePoly x = SparsePoly::variable();
    const SparsePoly xp1 = poly({{0, 1}, {1, 1}});
    CHECK(product({}) == SparsePoly::constant(1));
    CHECK(product({x, x, xp1}) == x * x * xp1);
    CHECK(pow(xp1, Integer(0)) == SparsePoly::constant(1));
    CHECK(pow(xp1, Integer(2)) == poly({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(pow(SparsePoly(), Integer(5)) == SparsePoly());
    CHECK_THROWS_AS(pow(xp1, Integer(-1)), std::invalid_argument);
}

TEST_CASE("derivative follows the power rule order by order") {
    const SparsePoly p = poly({{0, 4}, {2, 3}, {5, 1}});
    CHECK(derivative(p) == poly({{1, 6}, {4, 5}}));
    CHECK(derivative(p, 2) == poly({{0, 6}, {3, 20}}));
    CHECK(derivative(p, 0) == p);
    CHECK(derivative(p, 6) == SparsePoly());
    CHECK(derivative(SparsePoly()) == SparsePoly());
}

TEST_CASE("evaluation agrees between rational and integer entry points") {
    const SparsePoly p = poly({{0, -1}, {1, 2}, {3, 1}});
    CHECK(eval(p, Rational(0)) == Rational(-1));
    CHECK(eval(p, Rational(1, 2)) == Rational(1, 8));
    CHECK(eval(p, Rational(-2)) == Rational(-13));
    CHECK(eval_at_integer(p, Integer(-2)) == Rational(-13));
    CHECK(eval_at_integer(p, Integer(3)) == eval(p, Rational(3)));
}

TEST_CASE("divmod reconstructs the dividend and bounds the remainder") {
    const SparsePoly p = poly({{0, 2}, {1, -3}, {4, 1}});
    const SparsePoly d = poly({{0, -1}, {2, 1}});
    const auto [q, r] = divmod(p, d);
    CHECK(q * d + r == p);
    CHECK((r.is_zero() || r.degree() < d.degree()));
    CHECK_THROWS_AS(divmod(p, SparsePoly()), std::invalid_argument);
}

TEST_CASE("exact division succeeds on multiples and rejects remainders") {
    const SparsePoly d = poly({{0, 3}, {1, 2}});
    const SparsePoly q = poly({{0, -1}, {2, 5}});
    CHECK(div_exact(d * q, d) == q);
    CHECK(div_exact(SparsePoly(), d) == SparsePoly());
    CHECK_THROWS_AS(div_exact(poly({{0, 1}, {1, 2}}), poly({{1, 1}})),
                    std::invalid_argument);
}

TEST_CASE("primitive part scales to coprime integer coefficients") {
    const SparsePoly p = poly({{0, 4}, {2, 6}});
    CHECK(primitive_part(p) == poly({{0, 2}, {2, 3}}));
    CHECK(primitive_part(Rational(-1, 7) * p) == poly({{0, -2}, {2, -3}}));
    CHECK(primitive_part(SparsePoly()) == SparsePoly());
}

TEST_CASE("gcd divides both inputs and is fixed by scaling") {
    const SparsePoly a = poly({{0, -1}, {1, 1}});          // x - 1
    const SparsePoly b = poly({{0, 1}, {1, 1}});           // x + 1
    const SparsePoly g = gcd(a * a * b, a * b * b);
    CHECK(div_exact(g, a * b).is_constant());
    CHECK(gcd(a, SparsePoly()) == primitive_part(a));
    CHECK_THROWS_AS(gcd(SparsePoly(), SparsePoly()), std::invalid_argument);
    CHECK(gcd(Rational(7, 3) * a, Rational(-2) * a) == primitive_part(a));
}

TEST_CASE("squarefree part strips multiplicities and keeps every root") {
    const SparsePoly a = poly({{0, -1}, {1, 1}});
    const SparsePoly b = poly({{0, 2}, {1, 1}});
    const SparsePoly sf = squarefree_part(a * a * a * b);
    CHECK(div_exact(sf, a * b).is_constant());
    CHECK(squarefree_part(SparsePoly::constant(9)).is_constant());
    CHECK_THROWS_AS(squarefree_part(SparsePoly()), std::invalid_argument);
}

TEST_CASE("sign-variation count bounds positive roots") {
    CHECK(descartes_positive_bound(poly({{0, -1}, {3, 1}})) == 1);   // x^3 - 1
    CHECK(descartes_positive_bound(poly({{0, 1}, {1, 1}})) == 0);    // x + 1
    CHECK(descartes_positive_bound(poly({{0, 1}, {1, -3}, {2, 1}})) == 2);
    CHECK_THROWS_AS(descartes_positive_bound(SparsePoly()), std::invalid_argument);
}
