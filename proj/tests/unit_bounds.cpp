#include <doctest.h>

#include <stdexcept>

#include "wronsk/bounds.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/real_roots.hpp"

using namespace wronsk;

TEST_CASE("the sparse-model bound reproduces its pinned values") {
    CHECK(bound_sparse(1, 1, 1) == 14);
    CHECK_THROWS_AS(bound_sparse(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_sparse(1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bound_sparse(1, 1, 0), std::invalid_argument);
}

TEST_CASE("the sparse-model bound grows with every shape parameter") {
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t m = 1; m <= 3; ++m)
            for (unsigned long t = 1; t <= 3; ++t) {
                const Integer here = bound_sparse(k, m, t);
                CHECK(here < bound_sparse(k + 1, m, t));
                CHECK(here < bound_sparse(k, m + 1, t));
                CHECK(here < bound_sparse(k, m, t + 1));
            }
}

TEST_CASE("the dense-model bound reproduces its pinned values") {
    CHECK(bound_dense(1, 1, Integer(1)) == 4);
    CHECK(bound_dense(2, 1, Integer(1)) == 9);
    CHECK(bound_dense(1, 1, Integer(0)) == 1);
    CHECK_THROWS_AS(bound_dense(0, 1, Integer(1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_dense(1, 1, Integer(-1)), std::invalid_argument);
}

TEST_CASE("distinguished points certify the designed family's bound") {
    const OptimalInstance designed = optimal_instance(2, 1);
    const CertifiedUpsilon up = certified_bound_upsilon(designed.instance);
    CHECK(up.reduced_k == 2);
    CHECK(Integer(up.upsilon.size) == designed.predicted_upsilon);
    CHECK(up.bound == 7);
    CHECK(up.upsilon.points.size() == up.upsilon.size);
    CHECK(count_real_roots(expand(designed.instance)) <= up.bound);
}

TEST_CASE("a single monomial base is certified by its own root") {
    const SpsInstance inst = parse_instance("bases 1\nf1: 1*x^1\nterms 1\n1 : f1^1\n");
    const CertifiedUpsilon up = certified_bound_upsilon(inst);
    CHECK(up.reduced_k == 1);
    CHECK(up.upsilon.size == 1);
    CHECK(up.bound == 1);
}

TEST_CASE("a constant-only instance needs no distinguished points") {
    const SpsInstance inst = parse_instance("bases 1\nf1: 1*x^1\nterms 1\n5 :\n");
    const CertifiedUpsilon up = certified_bound_upsilon(inst);
    CHECK(up.reduced_k == 1);
    CHECK(up.upsilon.size == 0);
    CHECK(up.bound == 0);
}

TEST_CASE("duplicate and cancelled terms are merged before certification") {
    const SpsInstance dup = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^2\n2 : f1^2\n");
    CHECK(certified_bound_upsilon(dup).reduced_k == 1);

    const SpsInstance gone = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^2\n-1 : f1^2\n");
    CHECK_THROWS_AS(certified_bound_upsilon(gone), std::invalid_argument);
    CHECK_THROWS_AS(certified_bound_main3(gone), std::invalid_argument);
}

TEST_CASE("prefix Wronskian root counts certify the two-term family") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^1\nterms 2\n1 :\n1 : f1^1\n");  // 1 + x
    const CertifiedMain3 m3 = certified_bound_main3(inst);
    CHECK(m3.reduced_k == 2);
    CHECK(m3.prefix_root_counts == std::vector<unsigned long>{0, 0});
    CHECK(m3.bound == 1);
    CHECK(count_real_roots(expand(inst)) == 1);
}

TEST_CASE("prefix Wronskian certification respects the degree budget") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^40\n1 : f1^55\n");
    ExpansionBudget tight;
    tight.max_degree = 50;
    CHECK_THROWS_AS(certified_bound_main3(inst, tight), budget_error);
    CHECK_NOTHROW(certified_bound_main3(inst));
}

TEST_CASE("between distinguished points the root count stays below the family size") {
    const OptimalInstance designed = optimal_instance(2, 1);
    const HeartOutcome outcome = interval_bound_heart(designed.instance);
    CHECK(outcome.holds);
    CHECK(outcome.reduced_k == 2);
    CHECK(outcome.max_interval_count <= outcome.reduced_k - 1);
    CHECK_THROWS_AS(
        interval_bound_heart(parse_instance(
            "bases 1\nf1: 1*x^1\nterms 2\n1 : f1^1\n-1 : f1^1\n")),
        std::invalid_argument);
}

TEST_CASE("observed root counts never exceed the prefix Wronskian tally") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^2\n-1 :\n");  // (1+x)^2 - 1
    const GapReport gap = open_problem_gap(inst);
    CHECK(gap.lhs == 2);
    CHECK(gap.holds);
    CHECK(gap.reduced_k == 2);

    const GapReport designed_gap = open_problem_gap(optimal_instance(2, 1).instance);
    CHECK(designed_gap.holds);
}
