#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eppo/finite_group.hpp"
#include "eppo/perm_group.hpp"

namespace eppo {

/// The set of element orders of a group, with prime-power bookkeeping.
struct Spectrum {
    std::vector<uint64_t> orders;  // sorted ascending; always contains 1
    bool all_prime_power = true;
    /// An element of composite (not prime-power) order, when one exists.
    std::optional<std::pair<std::string, uint64_t>> composite_witness;

    bool sampled = false;
    uint64_t sample_count = 0;
    uint64_t seed = 0;

    bool contains(uint64_t d) const;
    std::string to_string() const;  // "{1, 2, 3, 5}"
};

/// Exact spectrum by iterating a dense group.
Spectrum spectrum_of(const FiniteGroup& g);

/// Exact spectrum by streaming a permutation group's elements.
/// Throws ThresholdError when order() > enumeration_limit.
Spectrum spectrum_of(const PermGroup& g, uint64_t enumeration_limit);

/**
 * Lower bound on the spectrum from n uniform random elements (transversal
 * subproducts through the stabilizer chain). Divisors of sampled orders are
 * included, so the result stays divisor-closed and is always a subset of
 * the true spectrum.
 */
Spectrum spectrum_sampled(const PermGroup& g, uint64_t n, uint64_t seed);

}  // namespace eppo
