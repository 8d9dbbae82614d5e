#pragma once

#include <cstdint>
#include <random>

namespace eppo {

/// Seeded PRNG wrapper. Uniform draws use rejection sampling on the raw
/// 64-bit stream so results are identical across standard libraries,
/// which std::uniform_int_distribution does not guarantee.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : engine_(seed), seed_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next() { return engine_(); }

    /// Uniform value in [0, n); n must be positive.
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
    uint64_t seed_;
};

}  // namespace eppo
