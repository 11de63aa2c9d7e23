#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/pit.hpp"

using namespace wronsk;

namespace {

// (x + 1)^2 - (x^2 + 2x + 1): identically zero without being visibly so.
const char* kHiddenZero =
    "bases 2\n"
    "f1: 1*x^0 + 1*x^1\n"
    "f2: 1*x^0 + 2*x^1 + 1*x^2\n"
    "terms 2\n"
    "1 : f1^2\n"
    "-1 : f2^1\n";

// x^2 - x - 1: nonzero, with small values near the origin.
const char* kNonzero =
    "bases 2\n"
    "f1: 1*x^0 + 1*x^1\n"
    "f2: 1*x^2\n"
    "terms 2\n"
    "1 : f2^1\n"
    "-1 : f1^1\n";

// 5x + 3(x + 1) + 2, where 1 = (x + 1) - x makes the third product dependent.
const char* kDependent =
    "bases 2\n"
    "f1: 1*x^1\n"
    "f2: 1*x^0 + 1*x^1\n"
    "terms 3\n"
    "5 : f1^1\n"
    "3 : f2^1\n"
    "2 :\n";

}  // namespace

TEST_CASE("instances evaluate without expanding") {
    const SpsInstance inst = parse_instance(kNonzero);
    const SparsePoly expanded = expand(inst);
    for (const Rational& x :
         {Rational(0), Rational(1), Rational(-2), Rational(1, 2), Rational(-7, 3)})
        CHECK(evaluate_instance(inst, x) == eval(expanded, x));

    // Exponents far beyond any expansion budget still evaluate.
    const SpsInstance tower = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 1\n1 : f1^500\n");
    CHECK(evaluate_instance(tower, Rational(0)) == Rational(1));
    CHECK(evaluate_instance(tower, Rational(-2)) == Rational(1));
}

TEST_CASE("query points up to the bound expose any hidden zero") {
    const PitVerdict v = pit_blackbox(parse_instance(kHiddenZero), PitModel::dense);
    CHECK(v.is_zero);
    CHECK_FALSE(v.witness.has_value());
    CHECK(Integer(v.query_count) == v.bound_used + 1);
}

TEST_CASE("the first nonvanishing point is returned as a witness") {
    const SpsInstance inst = parse_instance(kNonzero);
    const PitVerdict v = pit_blackbox(inst, PitModel::dense);
    CHECK_FALSE(v.is_zero);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == 1);
    CHECK(v.query_count == 1);
    CHECK(evaluate_instance(inst, Rational(*v.witness)) != Rational(0));
}

TEST_CASE("the sparse model sizes its query set from sparsity alone") {
    const SpsInstance inst = parse_instance("bases 1\nf1: 1*x^1\nterms 1\n1 : f1^1\n");
    const PitVerdict v = pit_blackbox(inst, PitModel::sparse);
    CHECK(v.bound_used == 14);
    CHECK_FALSE(v.is_zero);
    CHECK(v.query_count == 1);
}

TEST_CASE("literally zero coefficients are decided without queries") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n0 : f1^2\n0 : f1^1\n");
    const PitVerdict v = pit_blackbox(inst, PitModel::dense);
    CHECK(v.is_zero);
    CHECK(v.query_count == 0);
    CHECK(v.bound_used == 0);
}

TEST_CASE("cancelling duplicate rows still needs the full query sweep") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^2\n-1 : f1^2\n");
    for (const PitModel model : {PitModel::dense, PitModel::sparse}) {
        const PitVerdict v = pit_blackbox(inst, model);
        CHECK(v.is_zero);
        CHECK(Integer(v.query_count) == v.bound_used + 1);
    }
}

TEST_CASE("a query budget below the bound aborts instead of guessing") {
    const SpsInstance inst = parse_instance(kHiddenZero);
    CHECK_THROWS_AS(pit_blackbox(inst, PitModel::dense, 3), budget_error);
}

TEST_CASE("structural elimination explains every dependent product") {
    const SpsInstance inst = parse_instance(kDependent);
    const PitVerdict v = pit_whitebox(inst);
    CHECK_FALSE(v.is_zero);
    CHECK(v.basis == std::vector<std::size_t>{0, 1});
    REQUIRE(v.certificate.size() == 1);
    CHECK(v.certificate[0].term == 2);
    CHECK(v.certificate[0].coeffs ==
          std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(v.basis_coeffs == std::vector<Rational>{Rational(3), Rational(5)});
    CHECK(certificate_check(inst, v));
}

TEST_CASE("a cancelling combination is recognized as zero structurally") {
    const SpsInstance inst = parse_instance(
        "bases 2\n"
        "f1: 1*x^1\n"
        "f2: 1*x^0 + 1*x^1\n"
        "terms 3\n"
        "1 : f1^1\n"
        "-1 : f2^1\n"
        "1 :\n");  // x - (x + 1) + 1 == 0
    const PitVerdict v = pit_whitebox(inst);
    CHECK(v.is_zero);
    for (const Rational& c : v.basis_coeffs) CHECK(c == Rational(0));
    CHECK(certificate_check(inst, v));
}

TEST_CASE("corrupting a certificate is detected") {
    const SpsInstance inst = parse_instance(kDependent);
    const PitVerdict honest = pit_whitebox(inst);
    REQUIRE(certificate_check(inst, honest));

    PitVerdict wrong_coeff = honest;
    wrong_coeff.certificate[0].coeffs[0] += 1;
    CHECK_FALSE(certificate_check(inst, wrong_coeff));

    PitVerdict wrong_verdict = honest;
    wrong_verdict.is_zero = true;
    CHECK_FALSE(certificate_check(inst, wrong_verdict));

    PitVerdict wrong_basis = honest;
    wrong_basis.basis = {0, 2};
    CHECK_FALSE(certificate_check(inst, wrong_basis));

    PitVerdict wrong_sum = honest;
    wrong_sum.basis_coeffs[0] += 1;
    CHECK_FALSE(certificate_check(inst, wrong_sum));
}

TEST_CASE("the structural basis refuses to grow past its cap") {
    std::string text = "bases 1\nf1: 1*x^1\nterms 6\n";
    for (int e = 0; e < 6; ++e)
        text += "1 : f1^" + std::to_string(e) + "\n";
    const SpsInstance inst = parse_instance(text);
    CHECK_THROWS_AS(pit_whitebox(inst), budget_error);
    const PitVerdict v = pit_whitebox(inst, 6);
    CHECK(v.basis.size() == 6);
    CHECK(v.certificate.empty());
    CHECK(certificate_check(inst, v));
}

TEST_CASE("blackbox and structural verdicts agree on both examples") {
    for (const char* text : {kHiddenZero, kNonzero, kDependent}) {
        const SpsInstance inst = parse_instance(text);
        const PitVerdict black = pit_blackbox(inst, PitModel::dense);
        const PitVerdict white = pit_whitebox(inst);
        CHECK(black.is_zero == white.is_zero);
    }
}
