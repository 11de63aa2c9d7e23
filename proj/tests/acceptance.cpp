// Acceptance gate: every verification suite must pass, within its pinned
// wall-clock budget, with its pinned case count. One line per criterion.
#include <cstdio>
#include <string>
#include <vector>

#include "wronsk/suites.hpp"

int main() {
    struct Criterion {
        const char* suite;
        std::size_t min_cases;
        long long budget_ms;
    };
    // Budgets and case counts are part of the contract; do not loosen.
    const std::vector<Criterion> criteria = {
        {"power-derivative", 200, 10000},
        {"factorization", 100, 30000},
        {"soundness", 500, 60000},
        {"pit-agreement", 300, 60000},
        {"optimality", 6, 60000},
        {"frobenius", 50, 30000},
        {"descartes", 200, 10000},
        {"heart", 50, 60000},
    };

    bool all_passed = true;
    for (const auto& criterion : criteria) {
        const wronsk::SuiteResult res = wronsk::run_suite(criterion.suite);
        const bool cases_ok = res.cases >= criterion.min_cases;
        const bool time_ok = res.millis < criterion.budget_ms;
        const bool ok = res.passed() && cases_ok && time_ok;
        all_passed = all_passed && ok;
        std::printf("[%s] %-17s %4zu cases, %zu failures, %5lld ms (budget %lld ms)\n",
                    ok ? "PASS" : "FAIL", res.name.c_str(), res.cases, res.failures,
                    res.millis, criterion.budget_ms);
        if (!cases_ok)
            std::printf("       expected at least %zu cases\n", criterion.min_cases);
        if (!time_ok) std::printf("       over time budget\n");
        for (const std::string& note : res.notes)
            std::printf("       %s\n", note.c_str());
    }
    return all_passed ? 0 : 1;
}
