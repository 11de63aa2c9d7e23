#pragma once

#include <cstddef>

#include "wronsk/numbers.hpp"

namespace wronsk {

/// Caps for any operation that expands polynomials: nothing bigger than
/// this is ever materialized, so pathological inputs fail fast with a
/// budget error instead of exhausting memory.
struct ExpansionBudget {
    Integer max_degree = 10000;
    std::size_t max_sparsity = 100000;
};

}  // namespace wronsk
