#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wronsk/bounds.hpp"
#include "wronsk/instance.hpp"
#include "wronsk/pit.hpp"

namespace wronsk {

/**
 * Everything the pipeline can say about one instance. Fields that a budget
 * or a degenerate input puts out of reach stay empty and gain a note
 * explaining why, so "not applicable" is always distinguishable from 0.
 */
struct RootReport {
    std::string instance_echo;  // canonical serialization

    std::size_t terms = 0;
    std::size_t bases = 0;
    unsigned long max_sparsity = 0;
    Integer max_degree;

    bool instance_zero = false;              // expansion is identically 0
    std::optional<Integer> exact_count;      // distinct real roots
    std::optional<Integer> expanded_degree;
    std::vector<RationalInterval> isolating;

    std::optional<Integer> a_priori_sparse;
    std::optional<Integer> a_priori_dense;
    std::optional<Integer> certified_upsilon;
    std::optional<Integer> certified_main3;
    std::optional<unsigned long> upsilon_size;
    std::size_t reduced_k = 0;

    std::optional<PitVerdict> pit_blackbox_verdict;
    std::optional<PitVerdict> pit_whitebox_verdict;

    std::vector<std::string> notes;

    /// False only when some bound is strictly below the exact count — an
    /// implementation bug, never a property of the input.
    bool sound() const;
};

struct ReportOptions {
    ExpansionBudget budget;
    bool exact = true;            // expand and count roots
    bool isolate = false;         // include isolating intervals
    bool run_pit = false;         // include both PIT verdicts
    std::size_t basis_cap = 5;
    unsigned long max_queries = 1000000;
};

RootReport build_root_report(const SpsInstance& inst, const ReportOptions& opts = {});

/// Decimal-string JSON: every arbitrary-precision or count-valued number
/// is serialized as a base-10 string so no consumer ever rounds it.
nlohmann::json report_to_json(const RootReport& report);
nlohmann::json verdict_to_json(const PitVerdict& verdict);
nlohmann::json interval_to_json(const RationalInterval& iv);

std::string render_report_text(const RootReport& report);

}  // namespace wronsk
