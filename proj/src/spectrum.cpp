#include "eppo/spectrum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eppo/numbers.hpp"
#include "eppo/rng.hpp"

namespace eppo {

namespace {

bool order_is_prime_power_or_one(uint64_t d) { return d == 1 || is_prime_power(d); }

Spectrum from_order_set(std::set<uint64_t> orders) {
    Spectrum s;
    orders.insert(1);
    s.orders.assign(orders.begin(), orders.end());
    for (uint64_t d : s.orders)
        if (!order_is_prime_power_or_one(d)) s.all_prime_power = false;
    return s;
}

}  // namespace

bool Spectrum::contains(uint64_t d) const {
    return std::binary_search(orders.begin(), orders.end(), d);
}

std::string Spectrum::to_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) out << ", ";
        out << orders[i];
    }
    out << '}';
    return out.str();
}

Spectrum spectrum_of(const FiniteGroup& g) {
    std::set<uint64_t> orders;
    std::optional<std::pair<std::string, uint64_t>> witness;
    const auto& ords = g.element_orders();
    for (uint32_t x = 0; x < ords.size(); ++x) {
        orders.insert(ords[x]);
        if (!witness && !order_is_prime_power_or_one(ords[x]))
            witness = std::make_pair(g.element_name(x), ords[x]);
    }
    Spectrum s = from_order_set(std::move(orders));
    s.composite_witness = std::move(witness);
    return s;
}

Spectrum spectrum_of(const PermGroup& g, uint64_t enumeration_limit) {
    std::set<uint64_t> orders;
    std::optional<std::pair<std::string, uint64_t>> witness;
    for (auto it = g.elements(enumeration_limit); !it.done(); it.advance()) {
        const uint64_t d = it.current().order();
        orders.insert(d);
        if (!witness && !order_is_prime_power_or_one(d))
            witness = std::make_pair(it.current().to_cycle_string(), d);
    }
    Spectrum s = from_order_set(std::move(orders));
    s.composite_witness = std::move(witness);
    return s;
}

Spectrum spectrum_sampled(const PermGroup& g, uint64_t n, uint64_t seed) {
    SeededRng rng(seed);
    std::set<uint64_t> orders;
    std::optional<std::pair<std::string, uint64_t>> witness;
    for (uint64_t i = 0; i < n; ++i) {
        const Permutation x = g.random_element(rng);
        const uint64_t d = x.order();
        for (uint64_t div : divisors(d)) orders.insert(div);
        if (!witness && !order_is_prime_power_or_one(d))
            witness = std::make_pair(x.to_cycle_string(), d);
    }
    Spectrum s = from_order_set(std::move(orders));
    s.composite_witness = std::move(witness);
    s.sampled = true;
    s.sample_count = n;
    s.seed = seed;
    return s;
}

}  // namespace eppo
