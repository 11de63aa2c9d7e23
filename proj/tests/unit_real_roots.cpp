#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wronsk/real_roots.hpp"

using namespace wronsk;

namespace {

SparsePoly poly(std::vector<std::pair<long, long>> terms) {
    std::vector<SparsePoly::Term> t;
    for (const auto& [e, c] : terms) t.push_back({Integer(e), Rational(c)});
    return SparsePoly::from_terms(std::move(t));
}

Rational width(const RationalInterval& iv) { return *iv.hi - *iv.lo; }

}  // namespace

TEST_CASE("interval constructors enforce orientation") {
    CHECK_NOTHROW(RationalInterval::open(Rational(0), Rational(1)).validate());
    CHECK_NOTHROW(RationalInterval::point(Rational(2)).validate());
    CHECK_NOTHROW(RationalInterval::whole().validate());
    CHECK_THROWS_AS(RationalInterval::open(Rational(1), Rational(0)).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(RationalInterval::open(Rational(1), Rational(1)).validate(),
                    std::invalid_argument);
    CHECK(RationalInterval::point(Rational(2)).is_point());
    CHECK_FALSE(RationalInterval::left_of(Rational(2), true).is_point());
}

TEST_CASE("distinct-root counts ignore multiplicity") {
    const SparsePoly a = poly({{0, -1}, {1, 1}});  // x - 1
    CHECK(count_real_roots(poly({{0, 4}, {2, -5}, {4, 1}})) == 4);  // (x^2-1)(x^2-4)
    CHECK(count_real_roots(a * a) == 1);
    CHECK(count_real_roots(poly({{0, 1}, {2, 1}})) == 0);
    CHECK(count_real_roots(SparsePoly::constant(5)) == 0);
    CHECK_THROWS_AS(count_real_roots(SparsePoly()), std::invalid_argument);
}

TEST_CASE("counting respects open, closed, and unbounded endpoints") {
    const SparsePoly p = poly({{1, -1}, {2, 1}});  // x(x - 1)
    const RootIsolator iso(p);
    CHECK(iso.count_all() == 2);
    CHECK(iso.count(RationalInterval::closed(Rational(0), Rational(1))) == 2);
    CHECK(iso.count(RationalInterval::open(Rational(0), Rational(1))) == 0);
    CHECK(iso.count(RationalInterval::point(Rational(0))) == 1);
    CHECK(iso.count(RationalInterval::point(Rational(1, 2))) == 0);
    CHECK(iso.count(RationalInterval::left_of(Rational(0), true)) == 1);
    CHECK(iso.count(RationalInterval::left_of(Rational(0), false)) == 0);
    CHECK(iso.count(RationalInterval::right_of(Rational(0), false)) == 1);
    CHECK(iso.count(RationalInterval::whole()) == 2);
}

TEST_CASE("isolation produces one disjoint sorted window per root") {
    // (x^2 - 2)(x^2 - 3)(x - 1): five simple roots, two pairs close together.
    const SparsePoly p =
        poly({{0, -2}, {2, 1}}) * poly({{0, -3}, {2, 1}}) * poly({{0, -1}, {1, 1}});
    const RootIsolator iso(p);
    const auto windows = iso.isolate();
    REQUIRE(windows.size() == iso.count_all());
    for (std::size_t i = 0; i < windows.size(); ++i) {
        CHECK(iso.count(windows[i]) == 1);
        CHECK(iso.count(RationalInterval::point(*windows[i].lo)) == 0);
        CHECK(iso.count(RationalInterval::point(*windows[i].hi)) == 0);
        if (i + 1 < windows.size()) CHECK(*windows[i].hi <= *windows[i + 1].lo);
    }
}

TEST_CASE("refinement halves a window and keeps its root inside") {
    const SparsePoly p = poly({{0, -2}, {2, 1}});  // x^2 - 2
    const RootIsolator iso(p);
    for (RationalInterval window : iso.isolate()) {
        for (int step = 0; step < 8; ++step) {
            const Rational before = width(window);
            const RationalInterval next = iso.refine(window);
            CHECK(width(next) == before / 2);
            CHECK(*next.lo >= *window.lo);
            CHECK(*next.hi <= *window.hi);
            CHECK(iso.count(next) == 1);
            window = next;
        }
    }
    CHECK_THROWS_AS(iso.refine(RationalInterval::closed(Rational(0), Rational(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(iso.refine(RationalInterval::open(Rational(10), Rational(11))),
                    std::invalid_argument);
}

TEST_CASE("the chain is built on the squarefree part") {
    const SparsePoly a = poly({{0, -1}, {1, 1}});
    const SparsePoly b = poly({{0, 1}, {1, 1}});
    const RootIsolator iso(a * a * a * b * b);
    CHECK(iso.radical() == a * b);
    CHECK(iso.count_all() == 2);
}

TEST_CASE("a root at the midpoint recenters instead of splitting") {
    // Root exactly at 0; isolate() gives a symmetric-ish window around it
    // and refinement must keep halving without ever landing on the root.
    const SparsePoly p = poly({{1, 1}});  // x
    const RootIsolator iso(p);
    auto windows = iso.isolate();
    REQUIRE(windows.size() == 1);
    RationalInterval w = windows[0];
    for (int step = 0; step < 6; ++step) {
        w = iso.refine(w);
        CHECK(*w.lo < Rational(0));
        CHECK(*w.hi > Rational(0));
    }
}
