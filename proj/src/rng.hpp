#pragma once

#include <cstdint>
#include <random>

namespace wronsk::detail {

/// Seeded draws with rejection sampling on the raw engine output, so the
/// same seed yields the same stream on every platform and compiler.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t max_valid =
            UINT64_MAX - ((UINT64_MAX % n) + 1) % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x > max_valid);
        return x % n;
    }

    /// Uniform in [lo, hi] inclusive.
    long between(long lo, long hi) {
        return lo + static_cast<long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform nonzero in [-mag, mag]; mag >= 1.
    long signed_nonzero(unsigned long mag) {
        long v = between(1, static_cast<long>(mag));
        return below(2) ? v : -v;
    }

    bool coin() { return below(2) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace wronsk::detail
