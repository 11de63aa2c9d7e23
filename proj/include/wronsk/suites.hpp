#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wronsk {

/**
 * Self-contained verification suites. Every parameter — case counts,
 * shape limits, seeds — is pinned in the implementation so a suite means
 * the same thing on every run and every machine.
 */
struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    long long millis = 0;
    std::vector<std::string> notes;  // one line per failing case

    bool passed() const { return cases > 0 && failures == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);

}  // namespace wronsk
