#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace eppo {

/**
 * @brief Uniform interface over an enumerable finite group.
 *
 * Elements are dense indices 0..order()-1 so the same analysis code runs on
 * permutation groups and on table-represented groups. Implementations are
 * immutable after construction and safe to share read-only.
 */
class FiniteGroup {
public:
    virtual ~FiniteGroup() = default;

    virtual uint64_t order() const = 0;
    virtual uint32_t identity() const = 0;
    virtual uint32_t mul(uint32_t a, uint32_t b) const = 0;
    virtual uint32_t inv(uint32_t a) const = 0;
    virtual std::vector<uint32_t> generators() const = 0;
    virtual std::string element_name(uint32_t a) const = 0;
    virtual std::string describe() const = 0;

    /// Orders of all elements, indexed by element. Computed once at
    /// construction by implementations.
    virtual const std::vector<uint64_t>& element_orders() const = 0;

    uint64_t element_order(uint32_t a) const { return element_orders()[a]; }

    /// g x g^-1
    uint32_t conjugate(uint32_t g, uint32_t x) const { return mul(mul(g, x), inv(g)); }

    /// [a, b] = a^-1 b^-1 a b
    uint32_t commutator(uint32_t a, uint32_t b) const {
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }
};

/// A subgroup of a FiniteGroup: a sorted element-index set plus a generating
/// set. `parent` is a non-owning pointer; keep the parent alive.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<uint32_t> elements;  // sorted ascending
    std::vector<uint32_t> gens;

    uint64_t order() const { return elements.size(); }

    bool contains(uint32_t x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }

    bool is_trivial() const { return elements.size() == 1; }
    bool is_whole_group() const { return parent && elements.size() == parent->order(); }
};

/// Computes per-element orders by repeated multiplication; helper for
/// implementations without a cheaper route.
std::vector<uint64_t> orders_by_iteration(const FiniteGroup& g);

}  // namespace eppo
