#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wronsk/power_derivative.hpp"

using namespace wronsk;

namespace {

/// Classic partition-count recurrence: ways[n] after processing part sizes
/// 1..k equals the number of partitions of n into parts of size at most k.
unsigned long partition_count(unsigned long p) {
    std::vector<unsigned long> ways(p + 1, 0);
    ways[0] = 1;
    for (unsigned long part = 1; part <= p; ++part)
        for (unsigned long n = part; n <= p; ++n) ways[n] += ways[n - part];
    return ways[p];
}

}  // namespace

TEST_CASE("multiplicity encoding recovers weight and size") {
    CHECK(partition_weight({}) == 0);
    CHECK(partition_size({}) == 0);
    CHECK(partition_weight({3}) == 3);       // 1+1+1
    CHECK(partition_size({3}) == 3);
    CHECK(partition_weight({1, 0, 2}) == 7);  // 1 + 3 + 3
    CHECK(partition_size({1, 0, 2}) == 3);
}

TEST_CASE("partition enumeration is complete, sorted, and within 2^(p-1)") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
    for (unsigned long p = 1; p <= 12; ++p) {
        const auto parts = enumerate_partitions(p);
        CHECK(parts.size() == partition_count(p));
        CHECK(parts.size() <= (1ul << (p - 1)));
        CHECK(std::is_sorted(parts.begin(), parts.end()));
        CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
        for (const auto& s : parts) {
            CHECK(partition_weight(s) == p);
            CHECK((s.empty() || s.back() != 0));  // trailing zeros trimmed
        }
    }
}

TEST_CASE("derivative coefficients match the hand-computed low orders") {
    const PowerDerivativeTable table(Integer(7), 3);
    CHECK(table.alpha() == 7);
    CHECK(table.max_order() == 3);
    CHECK(table.coefficient(0, {}) == 1);
    // (f^a)'   = a f^(a-1) f'
    CHECK(table.coefficient(1, {1}) == 7);
    // (f^a)''  = a(a-1) f^(a-2) (f')^2 + a f^(a-1) f''
    CHECK(table.coefficient(2, {2}) == 42);
    CHECK(table.coefficient(2, {0, 1}) == 7);
    // (f^a)''' = a(a-1)(a-2) f^(a-3) (f')^3
    //          + 3a(a-1) f^(a-2) f' f'' + a f^(a-1) f'''
    CHECK(table.coefficient(3, {3}) == 210);
    CHECK(table.coefficient(3, {1, 1}) == 126);
    CHECK(table.coefficient(3, {0, 0, 1}) == 7);
    CHECK(table.level(2).size() == 2);
    CHECK(table.level(3).size() == 3);
    CHECK_THROWS_AS(table.level(4), std::out_of_range);
    CHECK_THROWS_AS(table.coefficient(2, {5}), std::out_of_range);
    CHECK_THROWS_AS(PowerDerivativeTable(Integer(2), 3), std::invalid_argument);
}

TEST_CASE("coefficients stay within the stated growth envelope") {
    const Integer alpha(9);
    const PowerDerivativeTable table(alpha, 6);
    for (unsigned long q = 0; q <= 6; ++q) {
        Integer cap;
        mpz_pow_ui(cap.get_mpz_t(), Integer(Integer(q) * Integer(q) + alpha).get_mpz_t(), q);
        for (const auto& [s, c] : table.level(q)) {
            CHECK(c > 0);
            CHECK(c <= cap);
        }
    }
}

TEST_CASE("assembled power derivatives equal derivatives of the expansion") {
    const SparsePoly f = SparsePoly::from_terms(
        {{Integer(0), Rational(1)}, {Integer(1), Rational(2)}, {Integer(3), Rational(-1)}});
    const Integer alpha(5);
    const SparsePoly expanded = pow(f, alpha);
    for (unsigned long q = 0; q <= 5; ++q)
        CHECK(power_derivative(f, alpha, q) == derivative(expanded, q));

    const SparsePoly c = SparsePoly::constant(3);
    CHECK(power_derivative(c, Integer(4), 2) == SparsePoly());
    CHECK(power_derivative(c, Integer(4), 0) == SparsePoly::constant(81));
}
