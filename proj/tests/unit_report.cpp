#include <doctest.h>

#include <string>

#include "wronsk/report.hpp"

using namespace wronsk;

TEST_CASE("a small instance reports exact counts under every bound") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^2\n-1 :\n");
    ReportOptions opts;
    opts.isolate = true;
    opts.run_pit = true;
    const RootReport report = build_root_report(inst, opts);

    REQUIRE(report.exact_count.has_value());
    CHECK(*report.exact_count == 2);
    CHECK(report.isolating.size() == 2);
    CHECK_FALSE(report.instance_zero);
    REQUIRE(report.a_priori_sparse.has_value());
    REQUIRE(report.a_priori_dense.has_value());
    REQUIRE(report.certified_upsilon.has_value());
    REQUIRE(report.certified_main3.has_value());
    CHECK(report.sound());
    REQUIRE(report.pit_blackbox_verdict.has_value());
    CHECK_FALSE(report.pit_blackbox_verdict->is_zero);
    REQUIRE(report.pit_whitebox_verdict.has_value());
    CHECK_FALSE(report.pit_whitebox_verdict->is_zero);

    const nlohmann::json j = report_to_json(report);
    CHECK(j["exact_count"] == "2");
    CHECK(j["terms"] == "2");
    CHECK(j["sound"] == true);
    CHECK(j["isolating"].size() == 2);
    CHECK(j["pit_blackbox"]["is_zero"] == false);
}

TEST_CASE("oversized expansions degrade to bounds plus explanatory notes") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 1\n1 : f1^50000\n");
    const RootReport report = build_root_report(inst, ReportOptions{});
    CHECK_FALSE(report.exact_count.has_value());
    CHECK_FALSE(report.certified_main3.has_value());
    REQUIRE(report.certified_upsilon.has_value());
    CHECK(*report.certified_upsilon == 1);
    CHECK(report.sound());
    CHECK(report.notes.size() >= 2);

    const nlohmann::json j = report_to_json(report);
    CHECK(j["exact_count"].is_null());
    CHECK(j["certified_upsilon"] == "1");
}

TEST_CASE("identically zero instances are flagged instead of counted") {
    const SpsInstance inst = parse_instance(
        "bases 1\nf1: 1*x^0 + 1*x^1\nterms 2\n1 : f1^2\n-1 : f1^2\n");
    const RootReport report = build_root_report(inst, ReportOptions{});
    CHECK(report.instance_zero);
    CHECK_FALSE(report.exact_count.has_value());
    const std::string text = render_report_text(report);
    CHECK(text.find("identically zero") != std::string::npos);
}
