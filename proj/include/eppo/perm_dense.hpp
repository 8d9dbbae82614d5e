#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "eppo/finite_group.hpp"
#include "eppo/perm_group.hpp"

namespace eppo {

/**
 * @brief Dense (fully enumerated) view of a PermGroup.
 *
 * Elements are sorted lexicographically by image table, so indices are
 * canonical for the abstract permutation set regardless of the stabilizer
 * chain that produced them. Construction refuses groups above the given
 * enumeration limit.
 */
class PermDenseGroup final : public FiniteGroup {
public:
    PermDenseGroup(const PermGroup& g, uint64_t enumeration_limit);

    uint64_t order() const override { return elements_.size(); }
    uint32_t identity() const override { return identity_; }
    uint32_t mul(uint32_t a, uint32_t b) const override {
        return index_.at(elements_[a] * elements_[b]);
    }
    uint32_t inv(uint32_t a) const override { return inverse_[a]; }
    std::vector<uint32_t> generators() const override { return gen_indices_; }
    std::string element_name(uint32_t a) const override { return elements_[a].to_cycle_string(); }
    std::string describe() const override;
    const std::vector<uint64_t>& element_orders() const override { return orders_; }

    uint32_t degree() const { return degree_; }
    const Permutation& perm(uint32_t a) const { return elements_[a]; }
    std::optional<uint32_t> index_of(const Permutation& p) const;

private:
    uint32_t degree_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, uint32_t, PermutationHash> index_;
    std::vector<uint32_t> gen_indices_;
    std::vector<uint32_t> inverse_;
    std::vector<uint64_t> orders_;
    uint32_t identity_ = 0;
};

}  // namespace eppo
